/* Copyright 2026 The skewlat Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewlat/pipeline.hpp"

#include <cstdio>
#include <random>

#include "skewlat/error.hpp"
#include "skewlat/residue.hpp"

namespace skewlat {

namespace {

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    try {
        return j[key].get<T>();
    } catch (const Json::exception&) {
        fail(ErrorCode::InvalidArgument, std::string("config field '") + key + "' has the wrong type");
    }
}

Ring::Elem elem_from_json(const Ring& R, const Json& j) {
    if (j.is_number_integer()) return R.from_int(j.get<std::int64_t>());
    if (j.is_array()) {
        std::vector<std::int64_t> coords;
        for (const auto& x : j) {
            if (!x.is_number_integer()) fail(ErrorCode::InvalidArgument, "element coordinates must be integers");
            coords.push_back(x.get<std::int64_t>());
        }
        return R.from_ints(coords);
    }
    if (j.is_string()) return parse_elem(R, j.get<std::string>());
    fail(ErrorCode::InvalidArgument, "cannot read a ring element from " + j.dump());
}

SkewPoly poly_from_json(const SkewContext& ctx, const Json& j) {
    if (j.is_string()) return parse_poly(ctx, j.get<std::string>());
    if (!j.is_array()) fail(ErrorCode::InvalidArgument, "polynomials are strings or coefficient arrays");
    std::vector<Ring::Elem> coeffs;
    for (const auto& c : j) coeffs.push_back(elem_from_json(ctx.ring(), c));
    return make_poly(ctx, coeffs);
}

Json elem_json(const Ring& R, const Ring::Elem& a) { return R.to_ints(a); }

Json poly_json(const SkewContext& ctx, const SkewPoly& f) {
    Json coeffs = Json::array();
    for (const auto& a : f.coeffs) coeffs.push_back(elem_json(ctx.ring(), a));
    return {{"text", format_poly(ctx, f)}, {"coeffs", coeffs}};
}

Json ring_json(const Ring& R) {
    Json j{{"name", R.name()}, {"rank", R.rank()}, {"commutative", R.is_commutative()}};
    j["base"] = {{"kind", to_string(R.base().kind())}, {"p", R.base().p()}, {"precision", R.base().precision()}};
    if (R.is_finite()) j["size"] = R.size();
    return j;
}

Json verdict_json(Verdict v) {
    if (v == Verdict::Unknown) return nullptr;
    return v == Verdict::Yes;
}

// Everything a command needs, built once from the config.
struct Built {
    std::unique_ptr<Tower> tower;
    LinearMap sigma;
    std::string sigma_name;
    std::shared_ptr<const PetitAlgebra> lambda;
    std::optional<Ring::Elem> c;
    std::unique_ptr<ReductionMap> psi;

    const Ring& R() const { return *tower->ring(); }
    const PetitAlgebra& residue() const { return psi->target(); }
};

Built build(const PipelineConfig& cfg, bool with_algebra = true) {
    Built b;
    b.tower = std::make_unique<Tower>(cfg.tower);
    const Ring& R = b.R();
    const auto& gens = b.tower->galois_generators();
    if (cfg.sigma_generator.empty() && gens.empty()) {
        b.sigma = LinearMap::identity(R);
        b.sigma_name = "id";
    } else {
        const GaloisAction& g = cfg.sigma_generator.empty() ? gens.front() : b.tower->action(cfg.sigma_generator);
        const int k = ((cfg.sigma_power % g.order) + g.order) % g.order;
        b.sigma = g.map.power(R, k);
        b.sigma_name = g.name + "^" + std::to_string(cfg.sigma_power);
    }
    if (!with_algebra) return b;
    auto ctx = std::make_shared<const SkewContext>(b.tower->ring(), b.sigma);
    if (!cfg.f.is_null()) {
        b.lambda = std::make_shared<const PetitAlgebra>(ctx, poly_from_json(*ctx, cfg.f));
        b.c = cyclic_constant(*b.lambda);
    } else {
        if (cfg.c.is_null()) fail(ErrorCode::InvalidArgument, "config needs either f or c");
        b.c = elem_from_json(R, cfg.c);
        b.lambda = std::make_shared<const PetitAlgebra>(ctx, cyclic_modulus(*ctx, *b.c, cfg.m));
    }
    b.psi = std::make_unique<ReductionMap>(reduction_of(b.lambda));
    return b;
}

CyclicCode select_code(const Built& b, const PipelineConfig& cfg) {
    const auto& A = b.psi->target_ptr();
    if (cfg.code.contains("generator")) return code_from_divisor(A, poly_from_json(A->ctx(), cfg.code["generator"]));
    auto codes = enumerate_codes(A, cfg.search_bound);
    if (cfg.code.contains("index")) {
        const auto k = cfg.code["index"].get<std::size_t>();
        if (k >= codes.size()) fail(ErrorCode::InvalidArgument, "code index out of range");
        return codes[k];
    }
    for (auto& C : codes)
        if (C.generator().degree() > 0 && C.generator().degree() < A->m()) return C;
    return codes.front();
}

Json code_json(const CyclicCode& C, const std::optional<Ring::Elem>& cbar) {
    const PetitAlgebra& A = C.ambient();
    const Ring& S = A.ring();
    Json rows = Json::array();
    for (const auto& r : C.generator_matrix()) {
        Json row = Json::array();
        for (const auto& a : r) row.push_back(elem_json(S, a));
        rows.push_back(row);
    }
    Json j{{"length", C.length()},
           {"generator", poly_json(A.ctx(), C.generator())},
           {"generator_matrix", rows},
           {"dimension", C.dimension()},
           {"free", C.is_free()},
           {"fp_dimension", C.fp_dimension()},
           {"size", C.size()}};
    if (cbar && !S.is_zero(*cbar)) j["constacyclic"] = is_constacyclic(C, *cbar);
    return j;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

PipelineConfig parse_config(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::InvalidArgument, "config must be a JSON object");
    PipelineConfig cfg;
    const Json tower = j.value("tower", Json::object());
    cfg.tower.kind = base_kind_from_string(get_or<std::string>(tower, "kind", "p-adic"));
    cfg.tower.p = get_or<std::int64_t>(tower, "p", 3);
    cfg.tower.precision = get_or<int>(tower, "precision", 32);
    cfg.tower.unramified_degree = get_or<int>(tower, "unramified_degree", 1);
    cfg.tower.ramification = get_or<int>(tower, "ramification", 1);
    cfg.tower.unit = get_or<std::int64_t>(tower, "unit", 1);
    if (cfg.tower.kind == BaseKind::PAdic && cfg.tower.p > 1 && is_prime(cfg.tower.p))
        cfg.tower.precision = std::min(cfg.tower.precision, BaseRing::max_padic_precision(cfg.tower.p));

    const Json sigma = j.value("sigma", Json::object());
    cfg.sigma_generator = get_or<std::string>(sigma, "generator", "");
    cfg.sigma_power = get_or<int>(sigma, "power", 1);

    cfg.f = j.value("f", Json());
    cfg.c = j.value("c", Json());
    cfg.m = get_or<int>(j, "m", 2);
    if (cfg.m < 1) fail(ErrorCode::InvalidArgument, "m must be at least 1");

    if (j.contains("generalized")) {
        const Json& g = j["generalized"];
        GeneralizedConfig gc;
        gc.rho_generator = get_or<std::string>(g, "rho_generator", "tau");
        gc.c = g.value("c", Json(1));
        gc.d = g.value("d", Json(1));
        gc.m = get_or<int>(g, "m", cfg.m);
        cfg.generalized = gc;
    }
    cfg.code = j.value("code", Json::object());
    if (!cfg.code.is_object()) fail(ErrorCode::InvalidArgument, "code must be an object");
    if (cfg.code.contains("index") && (!cfg.code["index"].is_number_integer() || cfg.code["index"].get<std::int64_t>() < 0))
        fail(ErrorCode::InvalidArgument, "code index must be a non-negative integer");

    const Json bounds = j.value("bounds", Json::object());
    const auto search = get_or<double>(bounds, "search", 1e7);
    cfg.samples = get_or<int>(bounds, "samples", 200);
    if (search < 1 || cfg.samples < 1) fail(ErrorCode::InvalidArgument, "bounds must be positive");
    cfg.search_bound = static_cast<std::uint64_t>(search);
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    return cfg;
}

Json config_to_json(const PipelineConfig& cfg) {
    Json j;
    j["tower"] = {{"kind", to_string(cfg.tower.kind)},
                  {"p", cfg.tower.p},
                  {"precision", cfg.tower.precision},
                  {"unramified_degree", cfg.tower.unramified_degree},
                  {"ramification", cfg.tower.ramification},
                  {"unit", cfg.tower.unit}};
    j["sigma"] = {{"generator", cfg.sigma_generator}, {"power", cfg.sigma_power}};
    if (!cfg.f.is_null()) j["f"] = cfg.f;
    if (!cfg.c.is_null()) j["c"] = cfg.c;
    j["m"] = cfg.m;
    if (cfg.generalized)
        j["generalized"] = {{"rho_generator", cfg.generalized->rho_generator},
                            {"c", cfg.generalized->c},
                            {"d", cfg.generalized->d},
                            {"m", cfg.generalized->m}};
    j["code"] = cfg.code;
    j["bounds"] = {{"search", cfg.search_bound}, {"samples", cfg.samples}};
    j["seed"] = cfg.seed;
    return j;
}

std::string config_hash(const Json& config) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : config.dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return hex64(h);
}

Json cmd_tower(const PipelineConfig& cfg) {
    const Built b = build(cfg, false);
    const Tower& K = *b.tower;
    Json gens = Json::array();
    for (const auto& g : K.galois_generators()) {
        Json images = Json::array();
        for (const auto& im : g.map.images()) images.push_back(elem_json(b.R(), im));
        gens.push_back({{"name", g.name}, {"order", g.order}, {"images", images}});
    }
    const ChainRing S = chain_ring_from_extension(K);
    Json autos = Json::array();
    for (const auto& a : S.automorphisms) autos.push_back({{"name", a.name}, {"order", a.order}});
    Json out;
    out["tower"] = {{"kind", to_string(K.spec().kind)},
                    {"p", K.spec().p},
                    {"precision", K.spec().precision},
                    {"unramified_degree", K.f()},
                    {"ramification", K.e()},
                    {"degree", K.degree()},
                    {"galois", K.galois()},
                    {"residue_modulus", K.residue_modulus()},
                    {"ring", ring_json(b.R())},
                    {"generators", gens}};
    out["residue"] = {{"ring", ring_json(*S.ring)},
                      {"size", S.size()},
                      {"ramification", S.e},
                      {"residue_degree", S.residue_degree},
                      {"is_field", S.e == 1},
                      {"max_ideal_gen", elem_json(*S.ring, S.max_ideal_gen)},
                      {"automorphisms", autos}};
    return out;
}

Json cmd_algebra(const PipelineConfig& cfg) {
    const Built b = build(cfg);
    const PetitAlgebra& L = *b.lambda;
    Json out;
    out["sigma"] = {{"name", b.sigma_name}, {"order", b.sigma.order(b.R()).value_or(0)}};
    out["order"] = {{"f", poly_json(L.ctx(), L.f())},
                    {"m", L.m()},
                    {"rank", L.base_dim()},
                    {"associative", is_associative(L)},
                    {"two_sided", is_two_sided_modulus(L)}};
    if (b.c) {
        const auto ord = b.sigma.order(b.R());
        if (ord && *ord == L.m() && !b.R().is_zero(*b.c)) {
            const auto cls = classify_cyclic_algebra(*b.tower, b.sigma, *b.c, L.m());
            out["classification"] = {{"associative", cls.associative}, {"division", verdict_json(cls.division)}, {"reason", cls.reason}};
        } else {
            out["classification"] = {{"associative", nullptr}, {"division", nullptr}, {"reason", "sigma does not have order m or c = 0"}};
        }
    }
    const PetitAlgebra& A = b.residue();
    Json res{{"f", poly_json(A.ctx(), A.f())},
             {"associative", is_associative(A)},
             {"two_sided", is_two_sided_modulus(A)}};
    const std::uint64_t n = A.size(cfg.search_bound);
    res["size"] = n;
    res["division"] = n <= cfg.search_bound / n ? Json(is_division_finite(A, cfg.search_bound)) : Json(nullptr);
    const auto nuc = right_nucleus(A, cfg.search_bound);
    res["nucleus_size"] = nuc.elements.size();
    res["center_size"] = center(A, cfg.search_bound).size();
    out["residue"] = res;

    if (cfg.generalized) {
        const auto& g = *cfg.generalized;
        const GaloisAction& rho = b.tower->action(g.rho_generator);
        const CyclicOrder D = make_cyclic_order(b.tower->ring(), rho.map, rho.order, elem_from_json(b.R(), g.c));
        const auto G = make_generalized_cyclic(D, b.sigma, elem_from_json(b.R(), g.d), g.m);
        const PetitAlgebra& GA = *G.algebra;
        // Fidelity and rank certification on seeded samples.
        std::mt19937_64 rng(cfg.seed);
        const BaseRing& B = GA.ring().base();
        auto random_elem = [&]() {
            BaseVec v(GA.base_dim());
            std::vector<std::int64_t> d(static_cast<std::size_t>(B.precision()));
            for (auto& x : v) {
                for (auto& digit : d) digit = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(B.p()));
                x = B.from_digits(d);
            }
            return GA.from_base(v);
        };
        int faithful = 0, certified = 0;
        for (int i = 0; i < cfg.samples; ++i) {
            const auto x = random_elem(), y = random_elem();
            const auto M = generalized_left_mul_matrix(G, x);
            if (elem_mat_vec(b.R(), M, generalized_vec(G, y)) == generalized_vec(G, GA.mul(y, x))) ++faithful;
            if (GA.is_zero(x)) continue;
            certify_full_column_rank(b.R(), M);
            ++certified;
        }
        out["generalized"] = {{"n", D.n},
                              {"m", g.m},
                              {"rank_D", D.ring->rank()},
                              {"base_dim", GA.base_dim()},
                              {"associative", is_associative(GA)},
                              {"samples", cfg.samples},
                              {"faithful", faithful},
                              {"full_rank", certified}};
    }
    return out;
}

Json cmd_codes(const PipelineConfig& cfg) {
    const Built b = build(cfg);
    const PetitAlgebra& A = b.residue();
    std::optional<Ring::Elem> cbar;
    if (b.c) cbar = b.R().reduce_into(A.ring(), *b.c);
    Json codes = Json::array();
    for (const auto& C : enumerate_codes(b.psi->target_ptr(), cfg.search_bound)) codes.push_back(code_json(C, cbar));
    Json out{{"ring", ring_json(A.ring())}, {"f", poly_json(A.ctx(), A.f())}, {"length", A.m()}, {"codes", codes}};
    out["constacyclic_constant"] = cbar && !A.ring().is_zero(*cbar) ? elem_json(A.ring(), *cbar) : Json(nullptr);
    return out;
}

Json cmd_lift(const PipelineConfig& cfg) {
    const Built b = build(cfg);
    const auto C = select_code(b, cfg);
    const Lattice L = construction_a(*b.psi, C);
    Json basis = Json::array();
    for (const auto& row : L.hermite.rows) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(L.base.to_int(x));
        basis.push_back(r);
    }
    return {{"base", {{"kind", to_string(L.base.kind())}, {"p", L.base.p()}, {"precision", L.base.precision()}}},
            {"rank", L.rank},
            {"ok_rank", L.ok_rank},
            {"hermite_basis", basis},
            {"pivot_valuations", L.hermite.pivot_vals},
            {"index", lattice_index(L)},
            {"index_exponent", lattice_index_exponent(L)},
            {"code_ref", {{"generator", poly_json(C.ambient().ctx(), C.generator())}, {"size", C.size()}}}};
}

Json cmd_mrd(const PipelineConfig& cfg) {
    const Built b = build(cfg);
    const PetitAlgebra& A = b.residue();
    const bool field = A.ring().is_commutative() && b.tower->e() == 1;
    Json out{{"shape", {A.m(), A.m()}}, {"ring", ring_json(A.ring())}, {"rank_convention", field ? "field" : "free"}};

    auto describe = [&](const MatrixCode& M) {
        Json j{{"members", M.members.size()}};
        if (M.members.size() < 2) return j;
        if (M.members.size() > cfg.search_bound / M.members.size()) {
            j["min_distance"] = nullptr;
            j["skipped"] = "exhaustive check exceeds the search bound";
            return j;
        }
        j["min_distance"] = min_rank_distance(M, cfg.search_bound);
        if (field) {
            const auto s = singleton_check(M, 1, cfg.search_bound);
            j["singleton"] = {{"dim_L", s.dim_L}, {"bound", s.bound}, {"is_mrd", s.is_mrd}};
        }
        return j;
    };
    if (A.size(cfg.search_bound) <= 10000) out["residue_full"] = describe(full_matrix_code(A));

    const auto C = select_code(b, cfg);
    Json code = describe(residue_matrix_code(C));
    code["generator"] = poly_json(A.ctx(), C.generator());
    out["code"] = code;

    const auto lifted = mrd_lift(*b.psi, C);
    const auto rep = certify_samples(lifted, cfg.samples, cfg.seed);
    out["order"] = {{"lattice_rank", lifted.lattice().rank},
                    {"lattice_index", lattice_index(lifted.lattice())},
                    {"samples", rep.samples},
                    {"zero_samples", rep.zero_samples},
                    {"certified", true},
                    {"max_pivot_valuation_sum", rep.max_valuation}};
    return out;
}

Json run_command(const std::string& command, const PipelineConfig& cfg) {
    Json result;
    if (command == "tower") result = cmd_tower(cfg);
    else if (command == "algebra") result = cmd_algebra(cfg);
    else if (command == "codes") result = cmd_codes(cfg);
    else if (command == "lift") result = cmd_lift(cfg);
    else if (command == "mrd") result = cmd_mrd(cfg);
    else fail(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    const Json normalized = config_to_json(cfg);
    return {{"command", command}, {"config", normalized}, {"config_hash", config_hash(normalized)}, {"result", result}};
}

Json verify_artifact(const Json& artifact) {
    if (!artifact.is_object() || !artifact.contains("command") || !artifact.contains("config"))
        fail(ErrorCode::InvalidArgument, "artifact lacks command or config");
    const auto command = artifact["command"].get<std::string>();
    const Json fresh = run_command(command, parse_config(artifact["config"]));
    return {{"command", command},
            {"config_hash", fresh["config_hash"]},
            {"hash_matches", artifact.value("config_hash", Json()) == fresh["config_hash"]},
            {"verified", fresh == artifact}};
}

std::string selected_code_csv(const PipelineConfig& cfg, std::uint64_t bound) {
    const Built b = build(cfg);
    return codewords_csv(select_code(b, cfg), bound);
}

}  // namespace skewlat
