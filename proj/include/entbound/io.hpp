// Copyright 2026 The entbound Authors
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

#ifndef ENTBOUND_IO_HPP
#define ENTBOUND_IO_HPP

#include <string>

namespace entbound {

/// 12 significant digits, the precision of every CSV column.
std::string fmt(double v);

/// Writes to path.tmp and renames over path; throws IOError.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace entbound

#endif  // ENTBOUND_IO_HPP
