#include "ueda/json_io.hpp"

#include <fstream>

namespace ueda {

namespace {

mpz_class int_from_json(const Json& j, const std::string& field) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        throw parse_error(field + ": expected a decimal-integer string");
    if (text.empty()) throw parse_error(field + ": empty integer");
    size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (start == text.size()) throw parse_error(field + ": bare sign");
    for (size_t i = start; i < text.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error(field + ": bad integer literal '" + text + "'");
    return mpz_class(text, 10);
}

int small_int(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw parse_error(field + ": expected an integer");
    return j.get<int>();
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(field + ": missing member '" + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) {
    return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw parse_error(field + ": expected [num, den]");
    mpz_class num = int_from_json(j[0], field + ".num");
    mpz_class den = int_from_json(j[1], field + ".den");
    if (den == 0) throw parse_error(field + ": zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Json to_json(const Scalar& s) {
    return Json::array({s.re.get_num().get_str(), s.re.get_den().get_str(),
                        s.im.get_num().get_str(), s.im.get_den().get_str()});
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4)
        throw parse_error(field + ": expected [re_num, re_den, im_num, im_den]");
    mpz_class ren = int_from_json(j[0], field);
    mpz_class red = int_from_json(j[1], field);
    mpz_class imn = int_from_json(j[2], field);
    mpz_class imd = int_from_json(j[3], field);
    if (red == 0 || imd == 0) throw parse_error(field + ": zero denominator");
    Rational re(ren, red), im(imn, imd);
    re.canonicalize();
    im.canonicalize();
    return Scalar(std::move(re), std::move(im));
}

Json to_json(const PSeries& s) {
    Json coeffs = Json::array();
    for (int m = 0; m <= s.order(); ++m) coeffs.push_back(to_json(s.coeff(m)));
    return Json{{"trunc_order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PSeries pseries_from_json(const Json& j, const std::string& field) {
    int order = small_int(member(j, "trunc_order", field), field + ".trunc_order");
    if (order < 0) throw parse_error(field + ": negative truncation order");
    const Json& coeffs = member(j, "coeffs", field);
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
        throw parse_error(field + ".coeffs: expected trunc_order+1 entries");
    PSeries s(order);
    for (int m = 0; m <= order; ++m)
        s.set_coeff(m, scalar_from_json(coeffs[static_cast<size_t>(m)],
                                        field + ".coeffs[" + std::to_string(m) + "]"));
    return s;
}

Json to_json(const LSeries& s) {
    Json coeffs = Json::array();
    if (!s.is_zero()) {
        for (int e = s.lo(); e <= s.hi(); ++e) {
            if (s.coeff(e).is_zero()) continue;
            coeffs.push_back(Json::array({e, to_json(s.coeff(e))}));
        }
    }
    Json window = s.is_zero() ? Json::array({0, 0}) : Json::array({s.lo(), s.hi()});
    return Json{{"window", std::move(window)}, {"coeffs", std::move(coeffs)}};
}

LSeries lseries_from_json(const Json& j, const std::string& field) {
    const Json& window = member(j, "window", field);
    if (!window.is_array() || window.size() != 2)
        throw parse_error(field + ".window: expected [lo, hi]");
    int lo = small_int(window[0], field + ".window.lo");
    int hi = small_int(window[1], field + ".window.hi");
    if (lo > hi) throw window_mismatch_error(field + ".window: lo > hi");
    const Json& coeffs = member(j, "coeffs", field);
    if (!coeffs.is_array()) throw parse_error(field + ".coeffs: expected an array");
    std::map<int, Scalar> m;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const Json& entry = coeffs[k];
        std::string where = field + ".coeffs[" + std::to_string(k) + "]";
        if (!entry.is_array() || entry.size() != 2)
            throw parse_error(where + ": expected [exponent, scalar]");
        int e = small_int(entry[0], where + ".exponent");
        if (e < lo || e > hi)
            throw window_mismatch_error(where + ": exponent " + std::to_string(e) +
                                        " outside declared window [" +
                                        std::to_string(lo) + "," + std::to_string(hi) +
                                        "]");
        m[e] = scalar_from_json(entry[1], where);
    }
    return lseries_from_map(m);
}

Json to_json(const MSeries& s) {
    Json wc = Json::array();
    for (int m = 0; m <= s.order(); ++m) wc.push_back(to_json(s.coeff(m)));
    return Json{{"nw", s.order()}, {"w_coeffs", std::move(wc)}};
}

MSeries mseries_from_json(const Json& j, const std::string& field) {
    int nw = small_int(member(j, "nw", field), field + ".nw");
    if (nw < 0) throw parse_error(field + ": negative fiber order");
    const Json& wc = member(j, "w_coeffs", field);
    if (!wc.is_array() || static_cast<int>(wc.size()) != nw + 1)
        throw parse_error(field + ".w_coeffs: expected nw+1 entries");
    MSeries s(nw);
    for (int m = 0; m <= nw; ++m)
        s.set_coeff(m, lseries_from_json(wc[static_cast<size_t>(m)],
                                         field + ".w_coeffs[" + std::to_string(m) + "]"));
    return s;
}

Json to_json(const BSeries& s) {
    Json coeffs = Json::array();
    for (const auto& [k, v] : s.terms())
        coeffs.push_back(Json::array({k.first, k.second, to_json(v)}));
    Json degree;
    if (s.degree() >= BSeries::kExactDegree)
        degree = "exact";
    else
        degree = s.degree();
    return Json{{"degree", std::move(degree)}, {"coeffs", std::move(coeffs)}};
}

BSeries bseries_from_json(const Json& j, const std::string& field) {
    const Json& deg = member(j, "degree", field);
    int degree;
    if (deg.is_string() && deg.get<std::string>() == "exact")
        degree = BSeries::kExactDegree;
    else
        degree = small_int(deg, field + ".degree");
    BSeries s(degree);
    const Json& coeffs = member(j, "coeffs", field);
    if (!coeffs.is_array()) throw parse_error(field + ".coeffs: expected an array");
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const Json& entry = coeffs[k];
        std::string where = field + ".coeffs[" + std::to_string(k) + "]";
        if (!entry.is_array() || entry.size() != 3)
            throw parse_error(where + ": expected [i, j, scalar]");
        int i = small_int(entry[0], where + ".i");
        int jj = small_int(entry[1], where + ".j");
        if (i < 0 || jj < 0) throw parse_error(where + ": negative exponent");
        if (i + jj > degree)
            throw window_mismatch_error(where + ": degree " + std::to_string(i + jj) +
                                        " exceeds declared truncation degree");
        s.set_coeff(i, jj, scalar_from_json(entry[2], where));
    }
    return s;
}

Json to_json(const Atlas& a) {
    return Json{{"radii", Json{{"eps0", to_json(a.radii.eps0)}}},
                {"annulus", Json{{"r_in", to_json(a.annulus.r_in)},
                                 {"r_out", to_json(a.annulus.r_out)}}},
                {"N_w", a.N_w},
                {"N_zeta", a.N_zeta},
                {"X_trans", to_json(a.X_trans)},
                {"Y_trans", to_json(a.Y_trans)},
                {"w0_unit", to_json(a.w0_unit)}};
}

Atlas atlas_from_json(const Json& j) {
    const Json& radii = member(j, "radii", "atlas");
    Rational eps0 = rational_from_json(member(radii, "eps0", "atlas.radii"),
                                       "atlas.radii.eps0");
    if (sgn(eps0) <= 0) throw parse_error("atlas.radii.eps0: must be positive");
    const Json& annulus = member(j, "annulus", "atlas");
    Rational r_in = rational_from_json(member(annulus, "r_in", "atlas.annulus"),
                                       "atlas.annulus.r_in");
    Rational r_out = rational_from_json(member(annulus, "r_out", "atlas.annulus"),
                                        "atlas.annulus.r_out");
    if (sgn(r_in) <= 0 || r_in >= r_out)
        throw parse_error("atlas.annulus: need 0 < r_in < r_out");
    int nw = small_int(member(j, "N_w", "atlas"), "atlas.N_w");
    int nz = small_int(member(j, "N_zeta", "atlas"), "atlas.N_zeta");
    if (nw < 1) throw parse_error("atlas.N_w: must be ≥ 1");
    if (nz < 0) throw parse_error("atlas.N_zeta: must be ≥ 0");
    return Atlas{ChartRadii(std::move(eps0)),
                 AnnulusWindow(std::move(r_in), std::move(r_out)),
                 mseries_from_json(member(j, "X_trans", "atlas"), "atlas.X_trans"),
                 mseries_from_json(member(j, "Y_trans", "atlas"), "atlas.Y_trans"),
                 bseries_from_json(member(j, "w0_unit", "atlas"), "atlas.w0_unit"),
                 nw,
                 nz};
}

Atlas load_atlas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open atlas file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return atlas_from_json(j);
}

void save_atlas(const Atlas& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    out << to_json(a).dump(2) << "\n";
}

Json to_json(const CoverConfig& cfg) {
    Json fams = Json::array();
    for (const auto& f : cfg.families)
        fams.push_back(Json{{"base", f.base},
                            {"components", f.components},
                            {"ramification", f.ramification},
                            {"map_degree", f.map_degree},
                            {"contractible", f.contractible}});
    return Json{{"degree", cfg.degree}, {"families", std::move(fams)}};
}

CoverConfig cover_config_from_json(const Json& j) {
    CoverConfig cfg;
    cfg.degree = small_int(member(j, "degree", "cover"), "cover.degree");
    const Json& fams = member(j, "families", "cover");
    if (!fams.is_array()) throw parse_error("cover.families: expected an array");
    for (size_t k = 0; k < fams.size(); ++k) {
        const Json& f = fams[k];
        std::string where = "cover.families[" + std::to_string(k) + "]";
        CoverFamily fam;
        const Json& base = member(f, "base", where);
        if (!base.is_string()) throw parse_error(where + ".base: expected a string");
        fam.base = base.get<std::string>();
        fam.components = small_int(member(f, "components", where), where + ".components");
        fam.ramification = small_int(member(f, "ramification", where), where + ".ramification");
        fam.map_degree = small_int(member(f, "map_degree", where), where + ".map_degree");
        if (f.contains("contractible")) {
            if (!f.at("contractible").is_boolean())
                throw parse_error(where + ".contractible: expected a boolean");
            fam.contractible = f.at("contractible").get<bool>();
        }
        cfg.families.push_back(std::move(fam));
    }
    return cfg;
}

}  // namespace ueda
