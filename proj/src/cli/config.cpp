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

#include "config.hpp"

#include <fstream>

namespace echochain::cli {

CLI::Option *ConfigBinder::flag(CLI::App &app, const std::string &key, bool &target,
                                const std::string &help) {
    CLI::Option *opt = app.add_flag("--" + key, target, help);
    entries_.push_back({key, opt, [&target](const nlohmann::json &v) { target = v.get<bool>(); }});
    return opt;
}

void ConfigBinder::apply(const nlohmann::json &config) const {
    for (const auto &[key, value] : config.items()) {
        const Entry *match = nullptr;
        for (const Entry &e : entries_) {
            if (e.key == key) {
                match = &e;
            }
        }
        if (match == nullptr || key == "config") {
            throw UsageError("unknown config key '" + key + "'");
        }
        if (match->opt->count() > 0) {
            continue; // the command line wins
        }
        try {
            match->set(value);
        } catch (const nlohmann::json::exception &) {
            throw UsageError("config key '" + key + "' has the wrong type");
        }
    }
}

nlohmann::json load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw UsageError("config file '" + path + "' must hold a JSON object");
    }
    return doc;
}

} // namespace echochain::cli
