// lagcell: cells, boundaries and homology of Lagrangian Grassmannians.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lagcell/export.hpp"
#include "lagcell/homology.hpp"
#include "lagcell/verify.hpp"

using namespace lagcell;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3, kIo = 4 };

struct Options {
    int n = 0;
    std::string space;
    int dim = -1;
    std::string coefficients = "Z";
    std::string format = "table";
    std::string out;
    int samples = 3;
    std::uint64_t seed = 1;
    int max_n = 0;
    std::vector<std::string> checks;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int bound(const Options& o, Space s) {
    if (o.max_n > 0) return o.max_n;
    return default_max_n(s);
}

void require(const Options& o, std::initializer_list<const char*> formats) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    for (const char* f : formats)
        if (o.format == f) return;
    throw UsageError("format '" + o.format + "' is not available for this command");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + o.out + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("write to '" + o.out + "' failed");
}

std::string cmd_cells(const Options& o) {
    require(o, {"table", "json", "csv"});
    const Space s = space_from_string(o.space);
    const ChainComplex cc = detail::skeleton(o.n, s, enumerate(o.n, s, bound(o, s)));
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int d = 0; d <= cc.top_dim(); ++d)
            for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i)
                if (o.dim < 0 || o.dim == d) arr.push_back(cell_json(cc, d, i));
        os << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "id,dim,label,lambda,mu,eps\n";
        for (int d = 0; d <= cc.top_dim(); ++d)
            for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i) {
                if (o.dim >= 0 && o.dim != d) continue;
                const Cell& c = cc.cells[d][i];
                os << cc.global_id(d, i) << "," << c.dim << "," << cell_label(c) << ",\"" << c.lambda.str() << "\",\"" << c.mu.str()
                   << "\"," << sign_string(c.eps) << "\n";
            }
    } else {
        os << std::left << std::setw(6) << "id" << std::setw(6) << "dim" << "cell\n";
        for (int d = 0; d <= cc.top_dim(); ++d)
            for (int i = 0; i < static_cast<int>(cc.cells[d].size()); ++i) {
                if (o.dim >= 0 && o.dim != d) continue;
                os << std::left << std::setw(6) << cc.global_id(d, i) << std::setw(6) << d << cell_label(cc.cells[d][i]) << "/" << d << "\n";
            }
    }
    return os.str();
}

std::string cmd_boundary(const Options& o) {
    require(o, {"table", "json", "csv", "dot"});
    const Space s = space_from_string(o.space);
    const ChainComplex cc = build(o.n, s, bound(o, s));
    if (o.format == "csv") return boundary_csv(cc, o.dim);
    if (o.format == "dot") return to_dot(cc);
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int d = 1; d <= cc.top_dim(); ++d) {
            if (o.dim >= 0 && o.dim != d) continue;
            ordered_json j;
            j["dim"] = d;
            j["rows"] = ordered_json::array();
            j["cols"] = ordered_json::array();
            for (int i = 0; i < cc.boundary[d].rows; ++i) j["rows"].push_back(cc.global_id(d - 1, i));
            for (int i = 0; i < cc.boundary[d].cols; ++i) j["cols"].push_back(cc.global_id(d, i));
            j["matrix"] = cc.boundary[d].dense();
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
        return os.str();
    }
    for (int d = 1; d <= cc.top_dim(); ++d) {
        if (o.dim >= 0 && o.dim != d) continue;
        const SparseMatrix& M = cc.boundary[d];
        os << "d_" << d << ": " << M.rows << " x " << M.cols << ", " << M.entries.size() << " nonzero\n";
        for (const auto& e : M.entries)
            os << "  " << cell_label(cc.cells[d][e.col]) << " -> " << cell_label(cc.cells[d - 1][e.row]) << " : " << std::showpos << e.value
               << std::noshowpos << "\n";
    }
    return os.str();
}

std::string cmd_homology(const Options& o) {
    require(o, {"table", "json", "csv"});
    const Space s = space_from_string(o.space);
    if (o.coefficients != "Z" && o.coefficients != "Z2") throw UsageError("--coefficients must be Z or Z2");
    const Coefficients coeff = o.coefficients == "Z" ? Coefficients::Z : Coefficients::Z2;
    const HomologyResult h = homology(build(o.n, s, bound(o, s)), coeff);
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json j;
        j["n"] = o.n;
        j["space"] = o.space;
        j["coefficients"] = o.coefficients;
        j["groups"] = ordered_json::array();
        for (std::size_t d = 0; d < h.groups.size(); ++d) {
            ordered_json g;
            g["dim"] = d;
            g["free_rank"] = h.groups[d].free_rank;
            g["torsion"] = ordered_json::array();
            for (const auto& f : h.groups[d].torsion) g["torsion"].push_back(f.convert_to<long long>());
            j["groups"].push_back(std::move(g));
        }
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "dim,free_rank,torsion,group\n";
        for (std::size_t d = 0; d < h.groups.size(); ++d) {
            std::string t;
            for (const auto& f : h.groups[d].torsion) t += (t.empty() ? "" : ";") + f.str();
            os << d << "," << h.groups[d].free_rank << "," << t << "," << h.groups[d].str(coeff) << "\n";
        }
    } else {
        for (std::size_t d = 0; d < h.groups.size(); ++d) {
            if (o.dim >= 0 && o.dim != static_cast<int>(d)) continue;
            os << "H_" << d << " = " << h.groups[d].str(coeff) << "\n";
        }
    }
    return os.str();
}

int cmd_verify(const Options& o, std::ostream& os) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.samples < 1) throw UsageError("--samples must be positive");
    VerifyOptions v;
    v.n = o.n;
    if (!o.space.empty()) v.space = space_from_string(o.space);
    v.samples = o.samples;
    v.seed = o.seed;
    if (o.max_n > 0) v.max_n = o.max_n;
    const std::vector<std::string> checks = o.checks.empty() ? check_names() : o.checks;
    bool all = true;
    for (const auto& name : checks) {
        const CheckReport r = run_check(name, v);
        os << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& line : r.lines) os << "  " << line << "\n";
        if (!r.passed) {
            os << "  counterexample: " << r.counterexample << "\n";
            all = false;
        }
    }
    return all ? kOk : kVerifyFailed;
}

std::string cmd_export(const Options& o) {
    require(o, {"json", "dot"});
    const Space s = space_from_string(o.space);
    const ChainComplex cc = build(o.n, s, bound(o, s));
    if (o.format == "dot") return to_dot(cc);
    return complex_document(cc, o.seed).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert cells, attaching degrees and homology of Lagrangian Grassmannians"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> spaces{"real", "complex", "mixed"};

    auto common = [&](CLI::App* sub, bool space_required) {
        sub->add_option("--n", o.n, "ambient rank n")->required();
        auto* sp = sub->add_option("--space", o.space, "real, complex or mixed")->check(CLI::IsMember(spaces));
        if (space_required) sp->required();
        sub->add_option("--dim", o.dim, "restrict output to one dimension");
        sub->add_option("--coefficients", o.coefficients, "Z or Z2")->check(CLI::IsMember({"Z", "Z2"}));
        sub->add_option("--format", o.format, "table, json, csv or dot")->check(CLI::IsMember({"table", "json", "csv", "dot"}));
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_option("--samples", o.samples, "oracle samples per case");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--max-n", o.max_n, "override the enumeration bound");
    };

    auto* cells = app.add_subcommand("cells", "list cells with dimensions");
    common(cells, true);
    auto* bnd = app.add_subcommand("boundary", "boundary matrices");
    common(bnd, true);
    auto* hom = app.add_subcommand("homology", "integral or mod 2 homology");
    common(hom, true);
    auto* ver = app.add_subcommand("verify", "run invariant checks");
    common(ver, false);
    ver->add_option("--checks", o.checks, "comma separated subset of checks")->delimiter(',')->check(CLI::IsMember(check_names()));
    auto* exp = app.add_subcommand("export", "write the chain complex as JSON or DOT");
    common(exp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (exp->parsed() && exp->count("--format") == 0) o.format = "json";

    if (o.max_n > 0) std::cerr << "warning: enumeration bound overridden to n <= " << o.max_n << "; large n may exhaust memory\n";

    try {
        if (ver->parsed()) {
            std::ostringstream os;
            const int rc = cmd_verify(o, os);
            emit(o, os.str());
            return rc;
        }
        std::string text;
        if (cells->parsed()) text = cmd_cells(o);
        else if (bnd->parsed()) text = cmd_boundary(o);
        else if (hom->parsed()) text = cmd_homology(o);
        else text = cmd_export(o);
        emit(o, text);
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: resource bound exceeded: " << e.what() << "\n";
        return kResource;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const integrity_error& e) {
        std::cerr << "error: integrity check failed: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
