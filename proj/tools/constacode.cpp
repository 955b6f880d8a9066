// constacode: constacyclic codes of length 3*l*p^s over F_{p^m}.
//
// Subcommands: field-info, classify, factor, codes, self-dual, verify.
// Exit status: 0 success, 1 invalid parameters or capacity, 2 verification
// mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "constacode/json_io.hpp"
#include "constacode/oracle.hpp"

using namespace constacode;

namespace {

struct CommonOpts {
    u64 p = 0;
    std::uint32_t m = 1;
    std::uint32_t s = 1;
    u64 l = 0;
    std::string format = "table";
    std::string field_spec_path;
    std::string lambda_spec = "0";
    std::size_t max_list = 64;
    std::size_t max_verify = 512;
    bool run_oracle = false;
};

FieldPtr build_field(const CommonOpts& o) {
    if (!o.field_spec_path.empty()) {
        std::ifstream in(o.field_spec_path);
        if (!in) throw std::invalid_argument("cannot open field spec file: " + o.field_spec_path);
        json j = json::parse(in);
        auto F = field_from_spec_json(j);
        if (F->characteristic() != o.p || F->degree() != o.m)
            throw std::invalid_argument("field spec file disagrees with -p/-m");
        return F;
    }
    return Field::make(o.p, o.m);
}

FE parse_one_lambda(const std::string& spec, const FieldPtr& F) {
    if (!spec.empty() && spec[0] == '[') {
        const json arr = json::parse(spec);
        std::vector<std::uint32_t> coeffs = arr.get<std::vector<std::uint32_t>>();
        if (coeffs.size() != F->degree()) throw std::invalid_argument("lambda coefficient list must have m entries");
        for (auto c : coeffs)
            if (c >= F->characteristic()) throw std::invalid_argument("lambda coefficient out of range");
        FE v(coeffs.begin(), coeffs.end());
        if (F->is_zero(v)) throw std::invalid_argument("lambda must be a unit");
        return v;
    }
    if (spec.rfind("val:", 0) == 0) {
        if (F->degree() != 1) throw std::invalid_argument("val: form is for prime fields only");
        const u64 v = std::stoull(spec.substr(4));
        FE r = F->from_uint(v);
        if (F->is_zero(r)) throw std::invalid_argument("lambda must be a unit");
        return r;
    }
    const u64 k = std::stoull(spec);  // power of xi
    return F->pow(F->xi(), k);
}

std::vector<FE> parse_lambdas(const CommonOpts& o, const CodeParams& P, const FieldPtr& F) {
    if (o.lambda_spec == "all") {
        // one representative per equivalence class: xi^{j p^s}, 0 <= j < d
        std::vector<FE> out;
        const u64 qm1 = F->group_order_u64();
        for (u64 j = 0; j < P.d(); ++j)
            out.push_back(F->pow(F->xi(), qm1 == 1 ? 0 : mul_mod(j, P.ps() % qm1, qm1)));
        return out;
    }
    return {parse_one_lambda(o.lambda_spec, F)};
}

void emit(const CommonOpts& o, const json& j, const std::string& table_text) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table_text;
}

std::string lambda_str(const FieldPtr& F, const FE& lam) {
    return "xi^" + std::to_string(F->dlog(lam));
}

int cmd_field_info(const CommonOpts& o) {
    auto F = build_field(o);
    json j = field_spec_json(F);
    std::string t = F->name() + "\n  modulus (low first): " + json(F->prime_modulus()).dump() +
                    "\n  xi: " + json(F->xi()).dump() + "\n";
    emit(o, j, t);
    return 0;
}

int cmd_classify(const CommonOpts& o) {
    const CodeParams P{o.p, o.m, o.s, o.l};
    P.validate();
    auto F = build_field(o);
    json out = json::array();
    std::string t;
    for (const FE& lam : parse_lambdas(o, P, F)) {
        const auto cls = classify_unit(P, F, lam);
        const u64 qm1 = F->group_order_u64();
        const FE rep = F->pow(F->xi(), qm1 == 1 ? 0 : mul_mod(cls.j, P.ps() % qm1, qm1));
        const FE a = equivalence_scalar(P, F, lam, rep);
        json j;
        j["lambda_log"] = F->dlog(lam);
        j["d"] = cls.d;
        j["j"] = cls.j;
        j["representative_log"] = F->dlog(rep);
        j["scalar_a"] = fe_json(a);
        out.push_back(std::move(j));
        t += "lambda = " + lambda_str(F, lam) + ": d = " + std::to_string(cls.d) + ", class j = " +
             std::to_string(cls.j) + ", equivalent to the " + lambda_str(F, rep) +
             "-constacyclic class via a = xi^" + std::to_string(F->dlog(a)) + "\n";
    }
    emit(o, out.size() == 1 ? out[0] : out, t);
    return 0;
}

int cmd_factor(const CommonOpts& o) {
    const CodeParams P{o.p, o.m, o.s, o.l};
    P.validate();
    auto F = build_field(o);
    json out = json::array();
    std::string t;
    for (const FE& lam : parse_lambdas(o, P, F)) {
        const auto table = factor_modulus(P, F, lam);
        out.push_back(factor_table_json(table));
        t += "x^" + std::to_string(P.n()) + " - " + lambda_str(F, lam) + " over " + F->name() + "   [" +
             table.case_tag + "]\n";
        for (const auto& e : table.entries)
            t += "  (" + e.factor.str() + ")^" + std::to_string(e.multiplicity) + "   " + e.provenance + "\n";
    }
    emit(o, out.size() == 1 ? out[0] : out, t);
    return 0;
}

int cmd_codes(const CommonOpts& o) {
    const CodeParams P{o.p, o.m, o.s, o.l};
    P.validate();
    auto F = build_field(o);
    json out = json::array();
    std::string t;
    for (const FE& lam : parse_lambdas(o, P, F)) {
        const auto ctx = duality_context(P, F, lam);
        CodeEnumerator en(P, F, lam);
        json jl;
        jl["params"] = params_json(P);
        jl["lambda_log"] = F->dlog(lam);
        jl["case"] = ctx.table->case_tag;
        jl["total"] = to_string_u128(en.total());
        t += "lambda = " + lambda_str(F, lam) + ": " + to_string_u128(en.total()) + " codes   [" +
             ctx.table->case_tag + "]\n";
        json codes = json::array();
        CodeHandle h;
        std::size_t listed = 0;
        while (listed < o.max_list && en.next(h)) {
            auto [g, gd] = generator_and_dual(h, ctx);
            codes.push_back(code_handle_json(h, g, gd));
            t += "  dim " + std::to_string(h.dimension()) + "  g = " + g.str() + "\n";
            ++listed;
        }
        jl["codes_listed"] = listed;
        jl["codes"] = std::move(codes);
        out.push_back(std::move(jl));
        if (u128(listed) < en.total()) t += "  ... (" + to_string_u128(en.total()) + " total)\n";
    }
    emit(o, out.size() == 1 ? out[0] : out, t);
    return 0;
}

int cmd_selfdual(const CommonOpts& o) {
    const CodeParams P{o.p, o.m, o.s, o.l};
    P.validate();
    auto F = build_field(o);
    const auto census = selfdual_census(P, F);
    const auto codes = selfdual_enumerate(census);
    std::optional<u64> oracle_count;
    if (o.run_oracle) {
        const auto brute = oracle::brute_selfdual_enumerate(P, F);
        oracle_count = brute.codes.size();
        if (u128(*oracle_count) != census.formula_count)
            throw VerificationError("self-dual census disagrees with the exhaustive oracle count");
    }
    json j = census_json(census, codes, o.max_list, oracle_count);
    std::string t = "self-dual cyclic codes, n = " + std::to_string(P.n()) + " over " + F->name() + "   [" +
                    census.case_tag + "]\n";
    t += "  formula count:   " + to_string_u128(census.formula_count) + "\n";
    t += "  partition count: " + to_string_u128(census.partition_count) + "\n";
    if (oracle_count) t += "  oracle count:    " + std::to_string(*oracle_count) + "\n";
    std::size_t listed = 0;
    for (const auto& h : codes) {
        if (listed >= o.max_list) {
            t += "  ... (" + std::to_string(codes.size()) + " total)\n";
            break;
        }
        t += "  dim " + std::to_string(h.dimension()) + "  g = " + h.generator().str() + "\n";
        ++listed;
    }
    emit(o, j, t);
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    const CodeParams P{o.p, o.m, o.s, o.l};
    P.validate();
    auto F = build_field(o);
    bool all_ok = true;
    json out = json::array();
    std::string t;

    for (const FE& lam : parse_lambdas(o, P, F)) {
        json j;
        j["lambda_log"] = F->dlog(lam);
        t += "lambda = " + lambda_str(F, lam) + ":\n";

        bool factor_ok = false;
        std::string factor_msg;
        try {
            const auto closed = factor_modulus(P, F, lam);
            const auto brute = oracle::brute_factor(Poly::binomial(F, P.n(), lam));
            factor_ok = closed.same_factors(brute);
            if (!factor_ok) factor_msg = "closed-form and oracle tables differ";
        } catch (const std::exception& ex) {
            factor_msg = ex.what();
        }
        j["factorization"] = factor_ok;
        t += std::string("  factorization vs oracle: ") + (factor_ok ? "pass" : ("FAIL: " + factor_msg)) + "\n";

        bool dual_ok = true;
        u64 checked = 0;
        std::string dual_msg;
        try {
            const auto ctx = duality_context(P, F, lam);
            const auto ctx_inv = duality_context(P, F, F->inv(lam));
            CodeEnumerator en(P, F, lam);
            const u128 total = en.total();
            CodeHandle h;
            while (checked < o.max_verify && en.next(h)) {
                auto [g, gd] = generator_and_dual(h, ctx);
                if (!oracle::verify_code_duality(P.n(), g, lam, gd)) {
                    dual_ok = false;
                    dual_msg = "inner-product sweep failed";
                    break;
                }
                if (dual_handle(dual_handle(h, ctx), ctx_inv).generator() != g) {
                    dual_ok = false;
                    dual_msg = "dual of dual is not the original code";
                    break;
                }
                ++checked;
            }
            j["duality_checked"] = checked;
            j["duality_total"] = to_string_u128(total);
            if (u128(checked) < total && dual_ok)
                t += "  duality: verified the first " + std::to_string(checked) + " of " + to_string_u128(total) +
                     " codes\n";
        } catch (const std::exception& ex) {
            dual_ok = false;
            dual_msg = ex.what();
        }
        j["duality"] = dual_ok;
        t += std::string("  duality + dual-of-dual: ") + (dual_ok ? "pass" : ("FAIL: " + dual_msg)) + "\n";

        if (P.p == 2 && F->is_one(lam)) {
            bool census_ok = false;
            std::string census_msg;
            try {
                const auto census = selfdual_census(P, F);
                const auto brute = oracle::brute_selfdual_enumerate(P, F);
                census_ok = (u128(brute.codes.size()) == census.formula_count);
                if (!census_ok) census_msg = "census disagrees with the oracle enumeration";
                j["selfdual_count"] = to_string_u128(census.formula_count);
            } catch (const std::exception& ex) {
                census_msg = ex.what();
            }
            j["selfdual_census"] = census_ok;
            t += std::string("  self-dual census (three-way): ") + (census_ok ? "pass" : ("FAIL: " + census_msg)) +
                 "\n";
            all_ok = all_ok && census_ok;
        }
        all_ok = all_ok && factor_ok && dual_ok;
        out.push_back(std::move(j));
    }

    emit(o, out.size() == 1 ? out[0] : out, t);
    return all_ok ? 0 : 2;
}

void add_field_opts(CLI::App* cmd, CommonOpts& o, bool with_code_params) {
    cmd->add_option("-p,--characteristic", o.p, "prime characteristic p (p != 3)")->required();
    cmd->add_option("-m,--extension", o.m, "extension degree m of F_{p^m}")->default_val(1);
    if (with_code_params) {
        cmd->add_option("-s,--s-exponent", o.s, "exponent s of the p^s part")->default_val(1);
        cmd->add_option("-l,--ell", o.l, "odd prime l (l != 3, l != p)")->required();
    }
    cmd->add_option("--format", o.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");
    cmd->add_option("--field-spec", o.field_spec_path, "JSON file pinning {p, m, modulus, xi}");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constacyclic codes of length 3*l*p^s over F_{p^m}"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* fi = app.add_subcommand("field-info", "print the deterministic field construction");
    add_field_opts(fi, o, false);

    auto* cl = app.add_subcommand("classify", "unit class and equivalence scalar of lambda");
    add_field_opts(cl, o, true);
    cl->add_option("--lambda", o.lambda_spec, "xi-power | [c0,c1,...] | val:v | all")->required();

    auto* fa = app.add_subcommand("factor", "closed-form factorization of x^n - lambda");
    add_field_opts(fa, o, true);
    fa->add_option("--lambda", o.lambda_spec, "xi-power | [c0,c1,...] | val:v | all")->required();

    auto* co = app.add_subcommand("codes", "enumerate lambda-constacyclic codes with duals");
    add_field_opts(co, o, true);
    co->add_option("--lambda", o.lambda_spec, "xi-power | [c0,c1,...] | val:v | all")->required();
    co->add_option("--max-list", o.max_list, "list at most this many codes")->default_val(64);

    auto* sd = app.add_subcommand("self-dual", "census of self-dual cyclic codes (p = 2)");
    add_field_opts(sd, o, true);
    sd->add_flag("--verify", o.run_oracle, "also run the exhaustive oracle enumeration");
    sd->add_option("--max-list", o.max_list, "list at most this many codes")->default_val(64);

    auto* ve = app.add_subcommand("verify", "cross-check the closed forms against the oracle");
    add_field_opts(ve, o, true);
    ve->add_option("--lambda", o.lambda_spec, "xi-power | [c0,c1,...] | val:v | all")->required();
    ve->add_option("--max-verify", o.max_verify, "cap on the per-code duality sweep")->default_val(512);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (fi->parsed()) return cmd_field_info(o);
        if (cl->parsed()) return cmd_classify(o);
        if (fa->parsed()) return cmd_factor(o);
        if (co->parsed()) return cmd_codes(o);
        if (sd->parsed()) return cmd_selfdual(o);
        if (ve->parsed()) return cmd_verify(o);
    } catch (const VerificationError& ex) {
        std::cerr << "verification mismatch: " << ex.what() << "\n";
        return 2;
    } catch (const CapacityError& ex) {
        std::cerr << "capacity: " << ex.what() << " (raise with CONSTACODE_CAPACITY)\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
