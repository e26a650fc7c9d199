// Command-line front end: weight distributions (closed-form tables vs
// exhaustive enumeration), the lemma verification suite, Gauss sums, and the
// JSON export.  Exit codes: 0 success / all match, 1 mismatch, 2 invalid
// input, 3 budget exceeded.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fewweight/ring_code.hpp"

using namespace fewweight;

namespace {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    uint32_t p = 0;
    uint32_t m = 0;
    std::string method = "both";
    std::string format = "table";
    std::string out;
    int lemma = 0;
    uint64_t seed = 12345;
    uint64_t budget = 1000000000ull;
};

uint64_t env_budget_default() {
    const char* e = std::getenv("FEWWEIGHT_BUDGET");
    if (e == nullptr || *e == '\0') return 1000000000ull;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(e, &end, 10);
    if (end == e || *end != '\0' || v == 0)
        throw std::invalid_argument("FEWWEIGHT_BUDGET must be a positive integer");
    return v;
}

void require_params(const Config& cfg) {
    if (cfg.p < 3 || cfg.p % 2 == 0 || !is_prime_u64(cfg.p))
        throw std::invalid_argument("p must be an odd prime");
    if (cfg.m < 1) throw std::invalid_argument("m must be at least 1");
}

uint64_t q_of(const Config& cfg) {
    uint64_t q = 1;
    for (uint32_t j = 0; j < cfg.m; ++j) {
        q *= cfg.p;
        if (q > FieldCtx::kMaxQ) throw std::length_error("p^m exceeds the table budget 2^22");
    }
    return q;
}

void require_budget(const Config& cfg) {
    const uint64_t q = q_of(cfg);
    if (q > cfg.budget / q) {
        std::ostringstream os;
        os << "budget exceeded: q^2 = " << q << "^2 > " << cfg.budget
           << " (raise --budget or FEWWEIGHT_BUDGET)";
        throw budget_error(os.str());
    }
}

bool tables_apply(uint32_t m) { return (m % 2 == 0) ? m >= 4 : m >= 3; }

std::string enumerator_str(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "1";
    for (const auto& [w, c] : wd.aggregated)
        if (w != 0) os << " + " << c << " z^" << w;
    return os.str();
}

void emit(const Config& cfg, const std::string& content) {
    if (cfg.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + cfg.out);
    f << content;
    if (!f.good()) throw std::invalid_argument("failed writing " + cfg.out);
}

void print_table(std::ostringstream& os, const WeightDistribution& wd) {
    os << "  weight  count    row\n";
    for (const auto& row : wd.raw) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  %6llu  %-8llu ", (unsigned long long)row.weight,
                      (unsigned long long)row.count);
        os << buf << row.label << "\n";
    }
}

int cmd_wdist(Config cfg) {
    require_params(cfg);
    std::ostringstream os;
    std::string method = cfg.method;
    if (method != "brute" && !tables_apply(cfg.m)) {
        if (method == "theorem")
            throw std::invalid_argument(
                "closed-form tables require even m >= 4 or odd m >= 3");
        os << "note: closed-form tables require even m >= 4 or odd m >= 3; "
              "enumeration only\n";
        method = "brute";
    }
    if (method != "theorem") require_budget(cfg);

    const CodeSpec spec = build_code(cfg.p, cfg.m);
    os << "C_D over F_" << cfg.p << " + u F_" << cfg.p << " with p=" << cfg.p
       << ", m=" << cfg.m << ", modulus " << spec.F.modulus_str() << "\n";
    os << "n = " << spec.n() << ", codewords = " << spec.F.q * spec.F.q << "\n";

    WeightDistribution wt, wb;
    const bool have_t = method != "brute";
    const bool have_b = method != "theorem";
    if (have_t) wt = wdist_theorem(spec);
    if (have_b) wb = wdist_bruteforce(spec);
    if (have_t && have_b && wt.aggregated != wb.aggregated) {
        os << "MISMATCH between the closed-form tables and enumeration:\n";
        for (const auto& [w, c] : wt.aggregated)
            if (wb.aggregated.find(w) == wb.aggregated.end() || wb.aggregated.at(w) != c)
                os << "  weight " << w << ": table " << c << ", enumerated "
                   << (wb.aggregated.count(w) ? wb.aggregated.at(w) : 0) << "\n";
        for (const auto& [w, c] : wb.aggregated)
            if (wt.aggregated.find(w) == wt.aggregated.end())
                os << "  weight " << w << ": table 0, enumerated " << c << "\n";
        std::cout << os.str();
        return 1;
    }

    const WeightDistribution& wd = have_t ? wt : wb;
    if (cfg.format == "json") {
        uint64_t md = 0;
        bool has_md = false;
        for (const auto& [w, c] : wd.aggregated)
            if (w > 0 && c > 0 && !has_md) md = w, has_md = true;
        if (!has_md) throw std::invalid_argument("degenerate distribution: no nonzero weight");
        emit(cfg, export_json_string(spec, have_b ? wb : wt, md));
        return 0;
    }

    print_table(os, wd);
    os << "enumerator: " << enumerator_str(wd) << "\n";
    uint64_t md = 0;
    bool has_md = false;
    for (const auto& [w, c] : wd.aggregated)
        if (w > 0 && c > 0 && !has_md) md = w, has_md = true;
    if (has_md) {
        os << "min distance: " << md << "\n";
        if (cfg.m >= 2) {
            uint64_t thr = cfg.p - 1;
            for (uint32_t j = 0; j + 2 < cfg.m; ++j) thr *= cfg.p;
            if (md < thr)
                os << "note: minimum weight " << md << " lies below the p^(m-2)(p-1) = "
                   << thr << " weight row\n";
        }
    } else {
        os << "min distance: undefined (no nonzero codeword)\n";
    }
    if (have_t && have_b)
        os << "methods agree: enumeration matches the closed-form tables\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_verify(const Config& cfg) {
    require_params(cfg);
    require_budget(cfg);
    const FieldCtx F = build_field(cfg.p, cfg.m);
    const std::vector<LemmaReport> reports =
        cfg.lemma != 0 ? verify_lemma(F, cfg.lemma, cfg.seed)
                       : verify_all_lemmas(F, cfg.seed);
    bool all_ok = true;
    std::ostringstream os;
    for (const auto& r : reports) {
        char head[96];
        std::snprintf(head, sizeof head, "lemma %2d  %-58s ", r.lemma, r.case_label.c_str());
        os << head;
        if (!r.match) {
            all_ok = false;
            os << "MISMATCH closed=" << r.closed_str << " oracle=" << r.oracle_str;
        } else if (r.vacuous) {
            os << "VACUOUS   " << r.note;
        } else {
            os << "ok        checked=" << r.checked;
            if (!r.note.empty()) os << "  (" << r.note << ")";
        }
        os << "\n";
    }
    os << (all_ok ? "all cases match\n" : "mismatches found\n");
    emit(cfg, os.str());
    return all_ok ? 0 : 1;
}

int cmd_gauss(const Config& cfg) {
    require_params(cfg);
    q_of(cfg);
    const AlgebraicScalar exact = gauss_sum_exact(cfg.p, cfg.m);
    const FieldCtx F = build_field(cfg.p, cfg.m);
    const std::complex<double> brute = gauss_sum_bruteforce(F);
    const AlgebraicScalar norm = exact * exact.conj();
    const bool ok = complex_matches(brute, exact.to_complex()) && norm.is_integer() &&
                    uint64_t(norm.as_integer()) == F.q;
    std::ostringstream os;
    os << "G(" << cfg.p << "," << cfg.m << ") = " << exact.str() << "\n";
    os << "  closed     = " << complex_str(exact.to_complex()) << "\n";
    os << "  enumerated = " << complex_str(brute) << "\n";
    os << "  G conj(G)  = " << norm.str() << " (q = " << F.q << ")\n";
    os << (ok ? "match\n" : "MISMATCH\n");
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_export(const Config& cfg) {
    require_params(cfg);
    require_budget(cfg);
    const CodeSpec spec = build_code(cfg.p, cfg.m);
    const WeightDistribution wb = wdist_bruteforce(spec);
    if (tables_apply(cfg.m)) {
        const WeightDistribution wt = wdist_theorem(spec);
        if (wt.aggregated != wb.aggregated) {
            std::cerr << "mismatch between enumeration and the closed-form tables\n";
            return 1;
        }
    }
    const std::string doc = export_json_string(spec, wb, min_distance(wb));
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + cfg.out);
    f << doc;
    if (!f.good()) throw std::invalid_argument("failed writing " + cfg.out);
    std::cout << "wrote " << cfg.out << " (n = " << spec.n() << ", "
              << wb.aggregated.size() << " weight classes)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        Config cfg;
        cfg.budget = env_budget_default();

        CLI::App app{"few-weight linear codes over F_p + u F_p from the defining set "
                     "D = {d in F_q^* : Tr(d^2) = 0}"};
        app.require_subcommand(1);

        CLI::App* wdist = app.add_subcommand("wdist", "weight distribution of C_D");
        CLI::App* verify = app.add_subcommand("verify", "closed forms vs brute-force oracles");
        CLI::App* gauss = app.add_subcommand("gauss", "quadratic Gauss sum, exact and enumerated");
        CLI::App* expo = app.add_subcommand("export", "write the JSON record of C_D");

        for (CLI::App* sub : {wdist, verify, gauss, expo}) {
            sub->add_option("--p", cfg.p, "odd prime p")->required();
            sub->add_option("--m", cfg.m, "extension degree m >= 1")->required();
            sub->add_option("--seed", cfg.seed, "seed for randomized spot-checks");
            sub->add_option("--budget", cfg.budget,
                            "max q^2 for enumeration (default 1e9, env FEWWEIGHT_BUDGET)");
        }
        wdist->add_option("--method", cfg.method, "theorem | brute | both")
            ->check(CLI::IsMember({"theorem", "brute", "both"}));
        wdist->add_option("--format", cfg.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));
        wdist->add_option("--out", cfg.out, "write output to a file instead of stdout");
        verify->add_option("--lemma", cfg.lemma, "verify a single lemma (1 or 3..17)");
        verify->add_option("--out", cfg.out, "write the report to a file");
        expo->add_option("--out", cfg.out, "output path")->required();

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        if (wdist->parsed()) return cmd_wdist(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (gauss->parsed()) return cmd_gauss(cfg);
        if (expo->parsed()) return cmd_export(cfg);
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal mismatch: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
