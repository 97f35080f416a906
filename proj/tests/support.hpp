// Copyright 2026 The densecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "densecode/qcore.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline oracle::M4 to_oracle(const densecode::Matrix4& m) {
    oracle::M4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = m(i, j);
    return r;
}

inline oracle::V4 to_oracle(const densecode::PureState& s) {
    return {s[0], s[1], s[2], s[3]};
}

inline densecode::Vector4 from_oracle(const oracle::V4& v) {
    return densecode::Vector4(v[0], v[1], v[2], v[3]);
}

inline densecode::Matrix4 from_oracle(const oracle::M4& m) {
    densecode::Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m[i][j];
    return r;
}

inline densecode::Matrix2 from_oracle(const oracle::M2& m) {
    densecode::Matrix2 r;
    r << m[0][0], m[0][1], m[1][0], m[1][1];
    return r;
}

}  // namespace testing_support
