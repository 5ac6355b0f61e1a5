// SPDX-License-Identifier: Apache-2.0
//
// twrnoma - performance analysis of two-way relay NOMA systems
// Copyright (C) 2026 The twrnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Runs every acceptance check against the reference configuration and
// prints one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include "twrnoma/cli/validation.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    using namespace twrnoma::cli;

    ValidateOptions opt;
    if (argc > 1 && std::string(argv[1]) == "--strict")
        opt.profile = Profile::strict;

    int failed = 0;
    for (int id = 1; id <= kCheckCount; ++id) {
        const auto r = run_check(id, twrnoma::SystemConfig::reference(), opt);
        std::cout << format_check(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (kCheckCount - failed) << "/" << kCheckCount << " criteria passed" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
