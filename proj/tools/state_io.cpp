// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "state_io.hpp"

#include <fstream>

#include "imsteer/error.hpp"

namespace imsteer::cli {

namespace {

using nlohmann::json;

double number(const json &obj, const char *key) {
    if (!obj.contains(key) || !obj.at(key).is_number()) {
        throw Error(std::string("state file: missing numeric field '") + key +
                    "'");
    }
    return obj.at(key).get<double>();
}

Vec3 vec3(const json &obj, const char *key) {
    if (!obj.contains(key)) {
        return {};
    }
    const auto v = obj.at(key).get<std::vector<double>>();
    if (v.size() != 3) {
        throw Error(std::string("state file: '") + key +
                    "' must have 3 entries");
    }
    return {v[0], v[1], v[2]};
}

ComplexMatrix matrix_from(const json &obj) {
    const auto re = obj.at("re").get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im;
    if (obj.contains("im")) {
        im = obj.at("im").get<std::vector<std::vector<double>>>();
    } else {
        im.assign(re.size(), std::vector<double>(re.size(), 0.0));
    }
    if (re.size() != 4 || im.size() != 4) {
        throw Error("state file: matrix must be 4x4");
    }
    ComplexMatrix m(4);
    for (std::size_t r = 0; r < 4; ++r) {
        if (re[r].size() != 4 || im[r].size() != 4) {
            throw Error("state file: matrix must be 4x4");
        }
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = Complex(re[r][c], im[r][c]);
        }
    }
    return m;
}

XStateParams x_params_from(const json &beta) {
    const auto get = [&beta](const char *key) {
        return beta.contains(key) ? beta.at(key).get<double>() : 0.0;
    };
    XStateParams p;
    p.beta_z0 = get("z0");
    p.beta_0z = get("0z");
    p.beta_xx = get("xx");
    p.beta_xy = get("xy");
    p.beta_yx = get("yx");
    p.beta_yy = get("yy");
    p.beta_zz = get("zz");
    return p;
}

} // namespace

DensityMatrix state_from_json(const json &doc) {
    try {
        if (!doc.is_object() || !doc.contains("kind")) {
            throw Error("state file: expected an object with a 'kind' field");
        }
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "werner") {
            return werner(number(doc, "v"));
        }
        if (kind == "mems") {
            return mems(number(doc, "c"));
        }
        if (kind == "xstate") {
            return x_state(x_params_from(doc.value("beta", json::object())));
        }
        if (kind == "bloch") {
            BlochTwoQubit p;
            p.m = vec3(doc, "m");
            p.n = vec3(doc, "n");
            if (doc.contains("T")) {
                const auto t =
                    doc.at("T").get<std::vector<std::vector<double>>>();
                if (t.size() != 3) {
                    throw Error("state file: 'T' must be 3x3");
                }
                for (std::size_t r = 0; r < 3; ++r) {
                    if (t[r].size() != 3) {
                        throw Error("state file: 'T' must be 3x3");
                    }
                    p.t[r] = {t[r][0], t[r][1], t[r][2]};
                }
            }
            return DensityMatrix(from_bloch(p));
        }
        if (kind == "matrix") {
            return DensityMatrix(matrix_from(doc));
        }
        throw Error("state file: unknown kind '" + kind + "'");
    } catch (const json::exception &e) {
        throw Error(std::string("state file: ") + e.what());
    }
}

DensityMatrix resolve_state(const std::string &source,
                            const FamilyParams &params) {
    if (source == "werner") {
        return werner(params.v);
    }
    if (source == "mems") {
        return mems(params.c);
    }
    if (source == "singlet") {
        return singlet();
    }
    if (source == "maximally_mixed") {
        return werner(0.0);
    }
    std::ifstream in(source);
    if (!in) {
        throw Error("cannot open state file '" + source + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw Error("cannot parse state file '" + source + "': " + e.what());
    }
    return state_from_json(doc);
}

} // namespace imsteer::cli
