// SPDX-License-Identifier: Apache-2.0
//
// Command-line front door: construct, verify, simulate, compare, export.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <sstream>

#include "macc/compare.hpp"
#include "macc/construct_cyclic.hpp"
#include "macc/construct_general.hpp"
#include "macc/construct_lift.hpp"
#include "macc/core.hpp"
#include "macc/delivery.hpp"
#include "macc/verify.hpp"

namespace {

using namespace macc;

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

struct ConstructOpts {
    std::string construction = "auto";
    int K = 0, r = 1, t = 0, L = 1, N = 0, m = 0, ell = 0;
    bool gcd_reduce = false;
    std::string epda_path;
};

std::pair<CachingArray, DeliveryArray> build(const ConstructOpts &o) {
    NetworkParams p{o.K, o.r, o.t, o.L, o.N};
    auto general = [&]() -> std::pair<CachingArray, DeliveryArray> {
        if (o.gcd_reduce) return gcd_reduced_arrays(p);
        return {build_caching_array_general(p), build_delivery_array_general(p)};
    };
    auto cyclic_a = [&]() -> std::pair<CachingArray, DeliveryArray> {
        if (std::gcd(p.K, p.t) == 1) return {build_caching_array_cyclic(p), build_delivery_array_case_a(p)};
        return build_grouped_arrays(p);
    };
    auto cyclic_b = [&]() -> std::pair<CachingArray, DeliveryArray> {
        if (o.m > 0 && p.K + p.L != static_cast<long long>(o.m) * (p.r * p.t + p.L))
            throw std::invalid_argument("construction 3: --m does not match K = m*rt + (m-1)*L");
        if (std::gcd(p.K, p.t) == 1) return {build_caching_array_cyclic(p), build_delivery_array_case_b(p)};
        return build_grouped_arrays(p);
    };
    auto lifted = [&]() -> std::pair<CachingArray, DeliveryArray> {
        Epda a;
        int r = p.r;
        if (!o.epda_path.empty()) {
            a = parse_epda(slurp(o.epda_path));
        } else {
            if (p.K % p.r != 0 || p.L % p.r != 0)
                throw std::invalid_argument("construction 4: needs r | K and r | L (or an --epda file)");
            a = epda_source(NetworkParams{p.K / p.r, 1, p.t, p.L / p.r, 0});
        }
        CachingArray c = lift_caching(a, r);
        DeliveryArray d = lift_delivery(c, a, r);
        if (o.ell > 0) d = antenna_slack(d, o.ell);
        return {std::move(c), std::move(d)};
    };

    if (o.construction == "1") return general();
    if (o.construction == "2") return cyclic_a();
    if (o.construction == "3") return cyclic_b();
    if (o.construction == "4") return lifted();
    if (o.construction != "auto")
        throw std::invalid_argument("unknown construction '" + o.construction + "' (use 1|2|3|4|auto)");

    // auto: best NDT first, lower subpacketization on ties.
    std::vector<std::pair<CachingArray, DeliveryArray>> candidates;
    std::vector<std::function<std::pair<CachingArray, DeliveryArray>()>> builders{cyclic_a, cyclic_b, lifted,
                                                                                  general};
    for (const auto &builder : builders) {
        try {
            candidates.push_back(builder());
        } catch (const std::exception &) {
        }
    }
    if (candidates.empty()) throw std::invalid_argument("auto: no construction applies to these parameters");
    std::size_t best = 0;
    auto key = [](const std::pair<CachingArray, DeliveryArray> &cd) {
        return std::make_pair(Rational(cd.second.S, cd.second.F), static_cast<long long>(cd.second.F));
    };
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        auto a = key(candidates[i]), b = key(candidates[best]);
        if (a.first < b.first || (a.first == b.first && a.second < b.second)) best = i;
    }
    return std::move(candidates[best]);
}

nlohmann::json to_json(const AnyArray &any) {
    nlohmann::json j;
    std::visit(
        [&j](const auto &a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, CachingArray>)
                j["kind"] = "caching";
            else if constexpr (std::is_same_v<T, DeliveryArray>)
                j["kind"] = "delivery";
            else
                j["kind"] = "epda";
            j["K"] = a.K;
            j["F"] = a.F;
            j["Z"] = a.Z;
            std::vector<std::vector<nlohmann::json>> rows;
            for (int row = 1; row <= a.F; ++row) {
                std::vector<nlohmann::json> cells;
                for (int k = 1; k <= a.K; ++k) {
                    if constexpr (std::is_same_v<T, CachingArray>)
                        cells.push_back(a.star(row, k) ? nlohmann::json("*") : nlohmann::json(nullptr));
                    else
                        cells.push_back(a.star(row, k) ? nlohmann::json("*") : nlohmann::json(a.at(row, k)));
                }
                rows.push_back(std::move(cells));
            }
            j["rows"] = rows;
            if constexpr (!std::is_same_v<T, Epda>) {
                j["r"] = a.r;
                if (!a.row_labels.empty()) j["row_labels"] = a.row_labels;
            }
            if constexpr (std::is_same_v<T, DeliveryArray>) {
                j["S"] = a.S;
                j["L"] = a.L;
                j["caching_hash"] = a.caching_hash;
            }
            if constexpr (std::is_same_v<T, Epda>) {
                j["S"] = a.S;
                j["L"] = a.L;
            }
        },
        any);
    return j;
}

int run(int argc, char **argv) {
    CLI::App app{"multi-access coded caching toolkit"};
    app.require_subcommand(1);

    ConstructOpts co;
    std::string out, format = "text", demand_spec = "distinct";
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
    std::vector<std::string> inputs;
    int t_min = -1, t_max = -1;

    auto add_params = [&co](CLI::App *cmd, bool need_construction) {
        if (need_construction)
            cmd->add_option("--construction", co.construction, "1|2|3|4|auto")->default_str("auto");
        cmd->add_option("--K", co.K, "users and caches");
        cmd->add_option("--r", co.r, "caches accessed per user");
        cmd->add_option("--t", co.t, "cache fraction K*M/N");
        cmd->add_option("--L", co.L, "transmit antennas");
        cmd->add_option("--N", co.N, "library files (default K)");
        cmd->add_option("--m", co.m, "multiplicity for construction 3");
        cmd->add_flag("--gcd-reduce", co.gcd_reduce, "reduce subpacketization by gcd(K,t,L)");
        cmd->add_option("--epda", co.epda_path, "EPDA document to lift (construction 4)");
        cmd->add_option("--ell", co.ell, "spare antennas on top of the lifted array");
    };

    auto *c_construct = app.add_subcommand("construct", "build caching and delivery arrays");
    add_params(c_construct, true);
    c_construct->add_option("--out", out, "output path prefix (stdout when omitted)");
    c_construct->add_option("--format", format, "text|doc")->default_str("doc");

    auto *c_verify = app.add_subcommand("verify", "check array documents");
    c_verify->add_option("files", inputs, "caching doc, caching+delivery docs, or EPDA doc")->required();

    auto *c_sim = app.add_subcommand("simulate", "schedule and zero-forcing simulation");
    add_params(c_sim, true);
    c_sim->add_option("files", inputs, "optional caching + delivery documents");
    c_sim->add_option("--demand", demand_spec, "distinct | uniform:<file>")->default_str("distinct");
    c_sim->add_option("--seed", seed, "simulation seed");
    c_sim->add_option("--tolerance", tolerance, "max relative reconstruction error");

    auto *c_cmp = app.add_subcommand("compare", "closed-form catalog and sweeps");
    add_params(c_cmp, false);
    c_cmp->add_option("--t-min", t_min, "sweep start (emits CSV)");
    c_cmp->add_option("--t-max", t_max, "sweep end");
    c_cmp->add_option("--format", format, "text|csv")->default_str("text");
    c_cmp->add_option("--out", out, "output path (stdout when omitted)");

    auto *c_exp = app.add_subcommand("export", "convert an array document");
    c_exp->add_option("files", inputs, "input document")->required()->expected(1);
    c_exp->add_option("--format", format, "doc|json")->default_str("doc");
    c_exp->add_option("--out", out, "output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (c_construct->parsed()) {
        auto [c, d] = build(co);
        if (out.empty()) {
            std::cout << serialize(c) << serialize(d);
        } else {
            emit(serialize(c), out + ".caching.txt");
            emit(serialize(d), out + ".delivery.txt");
        }
        return 0;
    }

    if (c_verify->parsed()) {
        std::vector<AnyArray> docs;
        for (const auto &f : inputs) docs.push_back(parse_any(slurp(f)));
        std::vector<Violation> all;
        const CachingArray *cache = nullptr;
        const DeliveryArray *deliv = nullptr;
        for (const auto &doc : docs) {
            if (auto *c = std::get_if<CachingArray>(&doc)) {
                cache = c;
                auto v = check_caching_array(*c, c->r);
                all.insert(all.end(), v.begin(), v.end());
            } else if (auto *d = std::get_if<DeliveryArray>(&doc)) {
                deliv = d;
            } else if (auto *a = std::get_if<Epda>(&doc)) {
                auto v = check_epda(*a);
                all.insert(all.end(), v.begin(), v.end());
            }
        }
        if (deliv) {
            if (!cache) throw std::runtime_error("verify: a delivery array needs its caching array document");
            if (deliv->caching_hash != content_hash(*cache))
                all.push_back({"shape", 0, 0, 0, 0, "delivery array was built from a different caching array"});
            auto v = check_delivery_array(*cache, *deliv, deliv->L);
            all.insert(all.end(), v.begin(), v.end());
        }
        for (const auto &v : all) std::cout << to_string(v) << "\n";
        if (all.empty()) std::cout << "ok\n";
        return all.empty() ? 0 : 1;
    }

    if (c_sim->parsed()) {
        CachingArray c;
        DeliveryArray d;
        if (inputs.size() == 2) {
            c = parse_caching(slurp(inputs[0]));
            d = parse_delivery(slurp(inputs[1]));
        } else if (inputs.empty()) {
            std::tie(c, d) = build(co);
        } else {
            throw std::runtime_error("simulate: pass no files or exactly caching + delivery");
        }
        NetworkParams p{d.K, d.r, co.t, d.L, co.N > 0 ? co.N : d.K};
        std::vector<int> demand;
        if (demand_spec == "distinct")
            demand = demand_distinct(p);
        else if (demand_spec.rfind("uniform:", 0) == 0)
            demand = demand_uniform(p, std::stoi(demand_spec.substr(8)));
        else
            throw std::runtime_error("simulate: --demand must be distinct or uniform:<file>");
        auto plan = schedule(c, d, demand);
        std::cout << render(plan);
        auto rep = symbolic_decode_check(plan, d);
        for (const auto &f : rep.failures) std::cout << "symbolic: " << f << "\n";
        std::cout << "symbolic: " << (rep.pass ? "pass" : "fail") << "\n";
        double err = numeric_simulate(plan, d, seed);
        std::cout << "numeric max relative error: " << err << "\n";
        bool ok = rep.pass && err <= tolerance;
        std::cout << (ok ? "ok" : "fail") << "\n";
        return ok ? 0 : 1;
    }

    if (c_cmp->parsed()) {
        if (t_min >= 0 && t_max >= t_min) {
            emit(sweep_csv(co.K, co.r, co.L, t_min, t_max), out);
        } else {
            NetworkParams p{co.K, co.r, co.t, co.L, co.N};
            auto rows = evaluate_catalog(p);
            if (format == "csv")
                emit(sweep_csv(co.K, co.r, co.L, co.t, co.t), out);
            else
                emit(render_table(p, rows), out);
        }
        return 0;
    }

    if (c_exp->parsed()) {
        AnyArray any = parse_any(slurp(inputs[0]));
        if (format == "json") {
            emit(to_json(any).dump(2) + "\n", out);
        } else {
            std::visit([&out](const auto &a) { emit(serialize(a), out); }, any);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
