// Copyright 2026 The echochain Authors
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

#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "echochain/cli.hpp"

namespace echochain::cli {

/**
 * Registers options and remembers how to fill each one from a JSON config
 * object. Keys are the long flag names without the leading dashes; a value
 * from the file is used only when the flag was absent on the command line.
 */
class ConfigBinder {
  public:
    template <typename T>
    CLI::Option *option(CLI::App &app, const std::string &key, T &target,
                        const std::string &help) {
        CLI::Option *opt = app.add_option("--" + key, target, help)->capture_default_str();
        entries_.push_back({key, opt, [&target](const nlohmann::json &v) { target = v.get<T>(); }});
        return opt;
    }

    CLI::Option *flag(CLI::App &app, const std::string &key, bool &target,
                      const std::string &help);

    /// Throws UsageError on unknown keys or mistyped values.
    void apply(const nlohmann::json &config) const;

  private:
    struct Entry {
        std::string key;
        CLI::Option *opt;
        std::function<void(const nlohmann::json &)> set;
    };
    std::vector<Entry> entries_;
};

/// Reads a JSON object from `path`; UsageError if unreadable or not an object.
nlohmann::json load_config(const std::string &path);

} // namespace echochain::cli
