// Copyright 2026 The qorder Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qorder {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

#define QORDER_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
     public:                                 \
        using Error::Error;                  \
    }

QORDER_DEFINE_ERROR(InvalidSize);
QORDER_DEFINE_ERROR(InvalidProgram);
QORDER_DEFINE_ERROR(InvalidConfig);
QORDER_DEFINE_ERROR(DimensionMismatch);
QORDER_DEFINE_ERROR(NonSquareLength);
QORDER_DEFINE_ERROR(NotAPermutation);
QORDER_DEFINE_ERROR(UnsupportedBranching);
QORDER_DEFINE_ERROR(ZeroVector);
QORDER_DEFINE_ERROR(NonZeroDiagonal);
QORDER_DEFINE_ERROR(DomainError);
QORDER_DEFINE_ERROR(IndexOutOfRange);
QORDER_DEFINE_ERROR(MaxStepsExceeded);
QORDER_DEFINE_ERROR(SizeBudgetExceeded);
QORDER_DEFINE_ERROR(ParseError);

#undef QORDER_DEFINE_ERROR

}  // namespace qorder
