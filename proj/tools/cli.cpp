#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "canonform/determinant.hpp"
#include "canonform/hermite.hpp"
#include "canonform/invariants.hpp"
#include "canonform/perm.hpp"
#include "canonform/similarity.hpp"
#include "canonform/smith.hpp"

namespace canonform::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::vector<std::string> inputs;
    std::string transforms_path;
    bool canonical = false;
    bool json = false;
    bool verify = false;
};

// Both renderings of one command; `verified` is only consulted with --verify.
struct Report {
    Json json;
    std::ostringstream text;
    bool verified = true;
    Json transforms;

    Report() : json{{"form", nullptr}, {"rank", nullptr}, {"diag", nullptr}, {"transforms", nullptr}, {"verified", nullptr}} {}
};

// Thrown for file-level problems that are not matrix syntax errors.
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rows_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json elems_json(const std::vector<Elem>& xs) {
    Json out = Json::array();
    for (const Elem& x : xs) out.push_back(to_string(x));
    return out;
}

void print_rows(std::ostream& out, const Matrix& m) {
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) out << (j > 1 ? " " : "") << to_string(m(i, j));
        out << '\n';
    }
}

void print_list(std::ostream& out, const std::string& label, const std::vector<Elem>& xs) {
    out << label << ':';
    for (const Elem& x : xs) out << ' ' << to_string(x);
    out << '\n';
}

std::string power_string(const PrimePower& pp) {
    std::string base = to_string(pp.prime);
    if (pp.exponent == 1) return base;
    const bool compound = base.find_first_of("+-", 1) != std::string::npos || base.find('*') != std::string::npos;
    if (compound) base = "(" + base + ")";
    return base + "^" + std::to_string(pp.exponent);
}

bool is_unimodular(const Matrix& m) { return det(m).is_unit(); }

bool is_chain(const std::vector<Elem>& diag) {
    for (std::size_t k = 0; k + 1 < diag.size(); ++k)
        if (!divides(diag[k], diag[k + 1])) return false;
    return std::all_of(diag.begin(), diag.end(), [](const Elem& d) { return canonical(d) == d; });
}

// ---------------------------------------------------------------------------
// verbs

void cmd_det(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const Elem d = det(a);
    rep.json["form"] = to_string(d);
    rep.text << to_string(d) << '\n';
    if (!opt.verify) return;
    if (a.rows() <= kExpansionLimit) {
        rep.verified = det_expansion(a) == d;
    } else {
        // A = Q^-1 H with H triangular.
        const HermiteResult hr = hermite_form(a);
        Elem prod = det(hr.q_inv);
        for (std::size_t i = 1; i <= a.rows(); ++i) prod *= hr.h(i, i);
        rep.verified = prod == d;
    }
}

void cmd_hermite(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const HermiteResult hr = opt.canonical ? hermite_canonical(a) : hermite_form(a);
    std::vector<Elem> pivots;
    for (std::size_t t = 1; t <= hr.rank; ++t) pivots.push_back(hr.h(t, hr.primary_cols[t - 1]));
    rep.json["form"] = rows_json(hr.h);
    rep.json["rank"] = hr.rank;
    rep.json["diag"] = elems_json(pivots);
    rep.json["primary_cols"] = hr.primary_cols;
    rep.transforms = Json{{"Q", rows_json(hr.q)}, {"H", rows_json(hr.h)}, {"rank", hr.rank}, {"primary_cols", hr.primary_cols}};
    rep.text << "rank: " << hr.rank << "\nprimary columns:";
    for (auto j : hr.primary_cols) rep.text << ' ' << j;
    rep.text << "\nH:\n";
    print_rows(rep.text, hr.h);
    if (!opt.verify) return;
    rep.verified = hr.q * a == hr.h && hr.q * hr.q_inv == Matrix::identity(a.ring(), a.rows()) && is_unimodular(hr.q);
    if (opt.canonical) rep.verified = rep.verified && static_cast<bool>(is_hermite_canonical(hr.h));
}

bool smith_replays(const Matrix& a, const SmithResult& s) {
    return s.p * a * s.q == s.d && is_unimodular(s.p) && is_unimodular(s.q) && is_chain(s.diag);
}

Json smith_transforms(const SmithResult& s) {
    return Json{{"P", rows_json(s.p)}, {"Q", rows_json(s.q)}, {"D", rows_json(s.d)}, {"rank", s.rank}, {"diag", elems_json(s.diag)}};
}

void cmd_smith(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const SmithResult s = smith(a);
    rep.json["form"] = rows_json(s.d);
    rep.json["rank"] = s.rank;
    rep.json["diag"] = elems_json(s.diag);
    rep.transforms = smith_transforms(s);
    print_list(rep.text, "diag", s.diag);
    rep.text << "rank: " << s.rank << '\n';
    if (opt.verify) rep.verified = smith_replays(a, s);
}

void cmd_invariants(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const SmithResult s = smith(a);
    const std::vector<PrimePower> eds = elementary_divisors_of(s.diag);
    std::vector<Elem> f{Elem::one(a.ring())};
    for (const Elem& q : s.diag) f.push_back(canonical(f.back() * q));

    Json ed_json = Json::array();
    for (const PrimePower& pp : eds) ed_json.push_back({{"prime", to_string(pp.prime)}, {"exponent", pp.exponent}});
    rep.json["form"] = rows_json(s.d);
    rep.json["rank"] = s.rank;
    rep.json["diag"] = elems_json(s.diag);
    rep.json["det_divisors"] = elems_json(f);
    rep.json["invariant_factors"] = elems_json(s.diag);
    rep.json["elementary_divisors"] = std::move(ed_json);
    rep.transforms = smith_transforms(s);

    rep.text << "rank: " << s.rank << '\n';
    print_list(rep.text, "det_divisors", f);
    print_list(rep.text, "invariant_factors", s.diag);
    rep.text << "elementary_divisors:";
    for (const PrimePower& pp : eds) rep.text << ' ' << power_string(pp);
    rep.text << '\n';
    if (opt.verify)
        rep.verified = smith_replays(a, s) && invariant_factors_from_elementary(eds, s.rank, a.ring()) == s.diag;
}

void certificate_report(const Matrix& a, const SimilarityCertificate& cert, const Options& opt, Report& rep) {
    rep.json["form"] = rows_json(cert.target);
    rep.transforms = Json{{"S", rows_json(cert.s)}, {"S_inv", rows_json(cert.s_inv)}};
    print_rows(rep.text, cert.target);
    rep.text << "S:\n";
    print_rows(rep.text, cert.s);
    if (opt.verify) rep.verified = verify(a, cert);
}

void canonical_form(const Options& opt, Report& rep, bool jordan_form) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const SimilarityCertificate cert = jordan_form ? jordan(a) : rcf(a);
    const std::vector<PrimePower> eds = similarity_elementary_divisors(a);
    Json blocks = Json::array();
    for (const PrimePower& pp : eds) blocks.push_back(power_string(pp));
    rep.json["rank"] = a.rows();
    rep.json["diag"] = std::move(blocks);
    certificate_report(a, cert, opt, rep);
}

void cmd_similar(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const Matrix b = read_matrix_file(opt.inputs.at(1));
    const auto cert = similar(a, b);
    rep.json["similar"] = cert.has_value();
    Json invariants = Json::array();
    for (const Polynomial& q : similarity_invariants(a)) invariants.push_back(to_string(q));
    rep.json["rank"] = a.rows();
    rep.json["diag"] = std::move(invariants);
    if (!cert) {
        rep.text << "not similar\n";
        if (opt.verify) rep.verified = similarity_invariants(a) != similarity_invariants(b);
        return;
    }
    rep.text << "similar\n";
    certificate_report(a, *cert, opt, rep);
}

Matrix augmented(const Matrix& a, const Matrix& y) {
    const Matrix aq = lift(a, Ring::Q), yq = lift(y, Ring::Q);
    Matrix out(Ring::Q, a.rows(), a.cols() + 1);
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) out(i, j) = aq(i, j);
        out(i, a.cols() + 1) = yq(i, 1);
    }
    return out;
}

void cmd_solve(const Options& opt, Report& rep) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const Matrix y = read_matrix_file(opt.inputs.at(1));
    const auto sol = solve(a, y);
    rep.json["consistent"] = sol.has_value();
    if (!sol) {
        rep.text << "inconsistent\n";
        if (opt.verify) rep.verified = hermite_form(augmented(a, y)).rank > hermite_form(lift(a, Ring::Q)).rank;
        return;
    }
    const std::size_t nullity = sol->null_basis.size();
    const std::size_t rank = a.cols() - nullity;
    Json basis = Json::array();
    for (const Matrix& v : sol->null_basis) basis.push_back(elems_json(v.entries()));
    rep.json["form"] = elems_json(sol->particular.entries());
    rep.json["rank"] = rank;
    rep.json["particular"] = elems_json(sol->particular.entries());
    rep.json["null_basis"] = std::move(basis);
    rep.json["nullity"] = nullity;

    print_list(rep.text, "particular", sol->particular.entries());
    rep.text << "rank: " << rank << "\nnullity: " << nullity << '\n';
    for (const Matrix& v : sol->null_basis) print_list(rep.text, "null", v.entries());
    if (!opt.verify) return;
    const Matrix aq = lift(a, Ring::Q);
    bool ok = aq * sol->particular == lift(y, Ring::Q);
    for (const Matrix& v : sol->null_basis) ok = ok && (aq * v).is_zero();
    rep.verified = ok;
}

void cmd_poly(const Options& opt, Report& rep, bool minimal) {
    const Matrix a = read_matrix_file(opt.inputs.at(0));
    const Polynomial p = minimal ? minimal_poly(a) : char_poly(a);
    rep.json["form"] = to_string(p);
    rep.text << to_string(p) << '\n';
    if (!opt.verify) return;
    bool ok = eval_poly(p, a).is_zero() && p.is_monic();
    if (minimal) ok = ok && divides(Elem(p), Elem(char_poly(a)));
    rep.verified = ok;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<std::size_t> images;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(pos, end - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError(ErrorKind::Parse, "permutation must be comma-separated positive integers", 1, pos + 1);
        images.push_back(std::stoul(item));
        pos = end + 1;
    }
    try {
        return Permutation(std::move(images));
    } catch (const Error& e) {
        throw ParseError(ErrorKind::Parse, e.what());
    }
}

void cmd_perm(const Options& opt, Report& rep) {
    const Permutation f = parse_permutation(opt.inputs.at(0));
    std::string cycle_text;
    Json cycle_json = Json::array();
    for (const auto& c : cycles(f)) {
        cycle_json.push_back(c);
        cycle_text += '(';
        for (std::size_t k = 0; k < c.size(); ++k) cycle_text += (k ? " " : "") + std::to_string(c[k]);
        cycle_text += ')';
    }
    const auto inv = inversions(f);
    const Permutation g = inverse(f);
    rep.json["form"] = f.images();
    rep.json["cycles"] = std::move(cycle_json);
    rep.json["sign"] = sign(f);
    rep.json["index"] = index(f);
    rep.json["inversions"] = inv.size();
    rep.json["inverse"] = g.images();

    rep.text << "cycles: " << cycle_text << "\nsign: " << sign(f) << "\nindex: " << index(f)
             << "\ninversions: " << inv.size() << "\ninverse:";
    for (auto x : g.images()) rep.text << ' ' << x;
    rep.text << '\n';
    if (opt.verify)
        rep.verified = compose(f, g) == Permutation::identity(f.size()) && sign(f) == (inv.size() % 2 ? -1 : 1);
}

void write_transforms(const std::string& path, const Json& transforms) {
    std::ofstream file(path);
    if (!file) throw IoFailure("cannot write '" + path + "'");
    file << transforms.dump(2) << '\n';
    if (!file) throw IoFailure("failed writing '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact canonical forms of matrices over Z, Q and Q[x]", "canonform"};
    app.require_subcommand(1);
    Options opt;

    struct Verb {
        const char* name;
        const char* help;
        std::size_t arity;
        std::function<void(const Options&, Report&)> fn;
    };
    const std::vector<Verb> verbs = {
        {"det", "determinant", 1, cmd_det},
        {"hermite", "row Hermite form", 1, cmd_hermite},
        {"smith", "Smith form d_1 | ... | d_r", 1, cmd_smith},
        {"invariants", "determinantal divisors, invariant factors, elementary divisors", 1, cmd_invariants},
        {"rcf", "rational canonical form (companion blocks, bottom row a_j = -coeff_j)", 1,
         [](const Options& o, Report& r) { canonical_form(o, r, false); }},
        {"jordan", "Jordan form over Q", 1, [](const Options& o, Report& r) { canonical_form(o, r, true); }},
        {"similar", "similarity test with conjugator S^-1 A S = B", 2, cmd_similar},
        {"solve", "general solution of A x = y over Q", 2, cmd_solve},
        {"minpoly", "minimal polynomial", 1, [](const Options& o, Report& r) { cmd_poly(o, r, true); }},
        {"charpoly", "characteristic polynomial det(xI - A)", 1, [](const Options& o, Report& r) { cmd_poly(o, r, false); }},
        {"perm", "permutation in one-line notation, e.g. 4,2,1,3", 1, cmd_perm},
    };
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("inputs", opt.inputs, v.arity == 1 ? "input" : "two inputs")
            ->required()
            ->expected(static_cast<int>(v.arity));
        sub->add_flag("--json", opt.json, "emit a JSON report");
        sub->add_flag("--verify", opt.verify, "replay every certificate");
        if (std::string(v.name) == "hermite") sub->add_flag("--canonical", opt.canonical, "normalize pivots and residues");
        if (std::string(v.name) == "hermite" || std::string(v.name) == "smith")
            sub->add_option("--transforms", opt.transforms_path, "write transforms as JSON");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const auto verb = std::find_if(verbs.begin(), verbs.end(), [&](const Verb& v) { return chosen->get_name() == v.name; });
    Report rep;
    try {
        verb->fn(opt, rep);
        if (!rep.transforms.is_null()) {
            rep.json["transforms"] = rep.transforms;
            if (!opt.transforms_path.empty()) write_transforms(opt.transforms_path, rep.transforms);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    if (opt.verify) rep.json["verified"] = rep.verified;
    if (opt.json) {
        out << rep.json.dump(2) << '\n';
    } else {
        out << rep.text.str();
        if (opt.verify) out << "verified: " << (rep.verified ? "true" : "false") << '\n';
    }
    if (opt.verify && !rep.verified) {
        err << "error: verification failed\n";
        return kDomainError;
    }
    return kOk;
}

}  // namespace canonform::cli
