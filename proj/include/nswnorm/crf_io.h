// Copyright 2026 The nswnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text model file. Layout is documented in docs/model_format.md.

#ifndef NSWNORM_CRF_IO_H_
#define NSWNORM_CRF_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "nswnorm/crf.h"

namespace nswnorm {
namespace crf {

inline constexpr std::string_view kModelMagic = "NSWNCRF\n";
inline constexpr int kModelFormatVersion = 1;

// Emission features with zero weight are not written.
void SaveModel(const CrfModel& model, std::ostream& out);
void SaveModel(const CrfModel& model, const std::string& path);

// Throws FormatError on a bad magic, unknown format version or malformed
// body. Does not check the feature template version.
CrfModel LoadModel(std::istream& in);
CrfModel LoadModel(const std::string& path);

}  // namespace crf
}  // namespace nswnorm

#endif  // NSWNORM_CRF_IO_H_
