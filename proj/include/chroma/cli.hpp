// Copyright (c) the chroma authors.
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

#ifndef CHROMA_CLI_HPP
#define CHROMA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma {

/// Runs the chroma command line. Exit codes: 0 ok, 1 verification failure,
/// 2 usage/parse/file errors. Streams are injectable for tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace chroma

#endif  // CHROMA_CLI_HPP
