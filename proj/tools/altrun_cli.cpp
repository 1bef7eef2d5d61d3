// Batch front end: triangles, polynomial families, brute-force statistic
// rows, and identity/generating-function verification sweeps.
//
// Exit codes: 0 success (all requested checks pass), 1 any FAIL verdict,
// 2 usage error or out-of-bounds request.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "altrun/altrun.hpp"

namespace {

using altrun::Integer;
using altrun::Rational;
using json = nlohmann::json;

std::string rational_str(const Rational& q) { return q.get_str(); }

// b-file body: "<index><space><value>" per line, 1-based, ASCII.
std::string bfile(const std::vector<std::string>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i + 1) << ' ' << values[i] << '\n';
    return os.str();
}

std::vector<std::string> integer_strings(const std::vector<Integer>& v) {
    std::vector<std::string> r;
    r.reserve(v.size());
    for (const Integer& x : v) r.push_back(x.get_str());
    return r;
}

struct Emitted {
    std::string text;
    int exit_code = 0;
};

Emitted emit_triangle(const std::string& target, std::size_t rows,
                      const std::string& format) {
    altrun::Triangle t;
    if (target == "U") t = altrun::triangle_u(rows);
    else if (target == "V") t = altrun::triangle_v(rows);
    else if (target == "S2") t = altrun::triangle_s2(rows);
    else t = altrun::triangle_r(rows);
    std::ostringstream os;
    if (format == "bfile") {
        std::vector<std::string> flat;
        for (const auto& row : t.values)
            for (const Integer& v : row) flat.push_back(v.get_str());
        os << bfile(flat);
    } else if (format == "csv") {
        for (std::size_t r = 0; r < t.values.size(); ++r) {
            os << (t.row_start + static_cast<long>(r));
            for (const Integer& v : t.values[r]) os << ',' << v.get_str();
            os << '\n';
        }
    } else if (format == "json") {
        json j;
        j["triangle"] = t.name;
        j["row_start"] = t.row_start;
        j["col_start"] = t.col_start;
        j["rows"] = json::array();
        for (const auto& row : t.values) j["rows"].push_back(integer_strings(row));
        os << j.dump(2) << '\n';
    } else {
        for (std::size_t r = 0; r < t.values.size(); ++r) {
            os << t.name << '(' << (t.row_start + static_cast<long>(r)) << ",*):";
            for (const Integer& v : t.values[r]) os << ' ' << v.get_str();
            os << '\n';
        }
    }
    return {os.str(), 0};
}

altrun::FamilyId parse_family(const std::string& s) {
    if (s == "R") return altrun::FamilyId::R;
    if (s == "P") return altrun::FamilyId::P;
    if (s == "PHAT") return altrun::FamilyId::PHat;
    if (s == "RHAT") return altrun::FamilyId::RHat;
    if (s == "Q") return altrun::FamilyId::Q;
    return altrun::FamilyId::QHat;
}

Emitted emit_poly(const std::string& target, std::size_t n,
                  const std::string& format) {
    altrun::Polynomial p = altrun::family_poly(parse_family(target), n);
    std::vector<std::string> coeffs;
    std::size_t len = p.is_zero() ? 1 : p.degree() + 1;
    for (std::size_t i = 0; i < len; ++i) coeffs.push_back(rational_str(p.coeff(i)));
    std::ostringstream os;
    if (format == "csv") {
        os << n;
        for (const auto& c : coeffs) os << ',' << c;
        os << '\n';
    } else if (format == "bfile") {
        os << bfile(coeffs);
    } else if (format == "json") {
        json j;
        j["family"] = target;
        j["n"] = n;
        j["coefficients"] = coeffs;
        os << j.dump(2) << '\n';
    } else {
        os << target << '_' << n << "(x) = " << p.str() << '\n';
    }
    return {os.str(), 0};
}

altrun::RowStatistic parse_row_statistic(const std::string& s) {
    if (s == "alt_runs") return altrun::RowStatistic::alt_runs;
    if (s == "pk") return altrun::RowStatistic::pk;
    if (s == "lpk") return altrun::RowStatistic::lpk;
    if (s == "signed_runs_up") return altrun::RowStatistic::signed_runs_up;
    if (s == "snake_count") return altrun::RowStatistic::snake_count;
    return altrun::RowStatistic::zigzag_count;
}

Emitted emit_oracle(const std::string& target, std::size_t n,
                    const std::string& format) {
    altrun::StatRow row = altrun::oracle_row(n, parse_row_statistic(target));
    std::vector<std::string> counts = integer_strings(row.counts);
    std::ostringstream os;
    if (format == "csv") {
        os << n;
        for (const auto& c : counts) os << ',' << c;
        os << '\n';
    } else if (format == "bfile") {
        os << bfile(counts);
    } else if (format == "json") {
        json j;
        j["statistic"] = row.statistic;
        j["n"] = n;
        j["counts"] = counts;
        os << j.dump(2) << '\n';
    } else {
        os << row.statistic << " n=" << n << ":";
        for (const auto& c : counts) os << ' ' << c;
        os << '\n';
    }
    return {os.str(), 0};
}

void append_report(std::ostringstream& os, const altrun::VerificationReport& rep,
                   const std::string& index_label, bool& any_fail) {
    os << rep.identity << ' ' << index_label << ": "
       << (rep.passed ? "PASS" : "FAIL");
    if (!rep.passed && rep.witness)
        os << " (lhs=" << rep.witness->lhs << " rhs=" << rep.witness->rhs << ')';
    os << '\n';
    if (!rep.passed) any_fail = true;
}

void run_identity_sweep(std::ostringstream& os, altrun::IdentityId id,
                        std::size_t max_n, bool& any_fail) {
    for (std::size_t n = altrun::identity_min_n(id); n <= max_n; ++n)
        append_report(os, altrun::verify_identity(id, n),
                      "n=" + std::to_string(n), any_fail);
}

void run_carlitz_sweep(std::ostringstream& os, std::size_t max_n, bool& any_fail) {
    for (std::size_t n = 2; n <= max_n; ++n) {
        auto rep = altrun::carlitz_original_diff(n);
        bool ok = rep.original_even_has_mismatch && rep.corrected_all_match;
        os << "CARLITZ_DIFF n=" << n << ": " << (ok ? "PASS" : "FAIL");
        if (ok) {
            std::size_t mismatches = 0;
            for (const auto& e : rep.even_entries)
                if (!e.original_matches) ++mismatches;
            os << " (original formula wrong at " << mismatches
               << " even-index powers, revision exact)";
        }
        os << '\n';
        if (!ok) any_fail = true;
    }
}

void run_gf(std::ostringstream& os, altrun::GfId id, std::size_t order,
            bool& any_fail) {
    auto rep = altrun::verify_gf(id, order);
    os << rep.identity << " order=" << order << ": "
       << (rep.passed ? "PASS" : "FAIL");
    if (!rep.passed && rep.witness)
        os << " (z^" << rep.witness->index << " lhs=" << rep.witness->lhs
           << " rhs=" << rep.witness->rhs << ')';
    os << '\n';
    if (!rep.passed) any_fail = true;
}

Emitted emit_verify(const std::string& target, std::size_t max_n,
                    std::size_t order) {
    std::ostringstream os;
    bool any_fail = false;
    bool matched = false;
    for (altrun::IdentityId id : altrun::kAllIdentityIds) {
        if (target == "all" || target == "identities" ||
            target == altrun::identity_name(id)) {
            run_identity_sweep(os, id, max_n, any_fail);
            matched = true;
        }
    }
    if (target == "all" || target == "CARLITZ_DIFF") {
        run_carlitz_sweep(os, max_n, any_fail);
        matched = true;
    }
    for (altrun::GfId id : altrun::kAllGfIds) {
        if (target == "all" || target == "gf" || target == altrun::gf_name(id)) {
            run_gf(os, id, order, any_fail);
            matched = true;
        }
    }
    if (!matched) throw CLI::ValidationError("unknown verify target: " + target);
    return {os.str(), any_fail ? 1 : 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructor and verifier for alternating-run, peak, "
                 "and derivative polynomial families"};
    app.require_subcommand(1);

    std::string format = "pretty";
    std::string target;
    std::size_t rows = 0, n = 0;
    std::size_t max_n = 12, order = altrun::kDefaultSeriesOrder;
    bool gf_only = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "bfile", "pretty"}));
    };

    CLI::App* tri = app.add_subcommand("triangle", "Emit a number triangle");
    tri->add_option("target", target, "U, V, S2, or R")
        ->required()
        ->check(CLI::IsMember({"U", "V", "S2", "R"}));
    tri->add_option("--rows", rows, "Number of rows")->required();
    add_format(tri);

    CLI::App* poly = app.add_subcommand("poly", "Emit a family polynomial");
    poly->add_option("target", target, "R, P, PHAT, RHAT, Q, or QHAT")
        ->required()
        ->check(CLI::IsMember({"R", "P", "PHAT", "RHAT", "Q", "QHAT"}));
    poly->add_option("--n", n, "Index within the family")->required();
    add_format(poly);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force statistic row");
    oracle->add_option("target", target, "Statistic")
        ->required()
        ->check(CLI::IsMember({"alt_runs", "pk", "lpk", "signed_runs_up",
                               "snake_count", "zigzag_count"}));
    oracle->add_option("--n", n, "Word length")->required();
    add_format(oracle);

    CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->add_option("target", target,
                       "Identity or GF id, 'identities', 'gf', or 'all'");
    verify->add_option("--max-n", max_n, "Sweep upper index (default 12)");
    verify->add_option("--order", order, "Series order for GF checks (default 24)");
    verify->add_flag("--gf", gf_only, "Run only the generating-function checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Emitted out;
        if (tri->parsed()) out = emit_triangle(target, rows, format);
        else if (poly->parsed()) out = emit_poly(target, n, format);
        else if (oracle->parsed()) out = emit_oracle(target, n, format);
        else {
            if (target.empty()) target = gf_only ? "gf" : "all";
            out = emit_verify(target, max_n, order);
        }
        std::fputs(out.text.c_str(), stdout);
        return out.exit_code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const altrun::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const altrun::UnsupportedIndex& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const altrun::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
