#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdb/checks.hpp"
#include "fdb/fdb.hpp"

namespace fdb::cli {

using Json = nlohmann::ordered_json;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kCheckFailed = 2;

// ---------------------------------------------------------------- logging

enum class LogLevel { quiet = 0, warn = 1, info = 2, debug = 3 };

/// Verbosity from FDB_LOG (quiet|warn|info|debug). Never affects results.
inline LogLevel log_level_from_env() {
    const char* v = std::getenv("FDB_LOG");
    if (!v) return LogLevel::warn;
    const std::string s(v);
    if (s == "quiet") return LogLevel::quiet;
    if (s == "info") return LogLevel::info;
    if (s == "debug") return LogLevel::debug;
    return LogLevel::warn;
}

class Logger {
public:
    Logger(std::ostream& sink, LogLevel level) : sink_(sink), level_(level) {}
    void operator()(LogLevel at, const std::string& msg) const {
        if (at <= level_ && level_ != LogLevel::quiet) sink_ << "[fdb] " << msg << '\n';
    }

private:
    std::ostream& sink_;
    LogLevel level_;
};

// ---------------------------------------------------------------- JSON conversion

inline Json scalar_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
    throw std::invalid_argument("expected a rational string such as \"3/2\", got " + j.dump());
}

inline int int_key(const std::string& k) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(k, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != k.size()) throw std::invalid_argument("coefficient key '" + k + "' is not an integer");
    return v;
}

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object with field '" + std::string(name) + "'");
    const auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument("missing field '" + std::string(name) + "'");
    return *it;
}

inline int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw std::invalid_argument("field '" + std::string(name) + "' must be an integer");
    return v.get<int>();
}

inline Json series_json(const TruncSeries& f) {
    Json coeffs = Json::object();
    for (const auto& [n, c] : f.free_coeffs()) coeffs[std::to_string(n)] = scalar_json(c);
    return Json{{"kind", to_string(f.kind())}, {"truncation", f.truncation()}, {"coeffs", coeffs}};
}

inline TruncSeries series_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    const int N = int_field(j, "truncation");
    std::map<int, Scalar> c;
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) throw std::invalid_argument("'coeffs' must be an object");
    for (const auto& [k, v] : coeffs.items()) c[int_key(k)] = scalar_from_json(v);
    if (kind == "diffeo") return TruncSeries::diffeo(N, c);
    if (kind == "invertible") return TruncSeries::invertible(N, c);
    throw std::invalid_argument("unknown series kind '" + kind + "' (expected diffeo or invertible)");
}

template <class B, class Namer>
Json lincomb_json(const LinComb<B>& v, Namer&& name) {
    Json out = Json::object();
    for (const auto& [b, c] : v) out[name(b)] = scalar_json(c);
    return out;
}

template <class B>
Json lincomb_json(const LinComb<B>& v) {
    return lincomb_json(v, [](const B& b) { return to_string(b); });
}

template <class B, class Namer>
Json tensor_json(const Tensor2<B>& t, Namer&& name) {
    Json out = Json::array();
    for (const auto& [p, c] : t) out.push_back(Json{{"left", name(p.left)}, {"right", name(p.right)}, {"coeff", scalar_json(c)}});
    return out;
}

template <class B>
Json tensor_json(const Tensor2<B>& t) {
    return tensor_json(t, [](const B& b) { return to_string(b); });
}

inline std::string operad_key(int arity) { return std::to_string(arity); }
inline std::string operad_key(const PlanarBinaryTree& t) { return t.code(); }

template <class Op>
Json operad_series_json(const OperadSeries<Op>& f, const std::string& name) {
    Json coeffs = Json::object();
    for (const auto& [p, c] : f.coeffs()) coeffs[operad_key(p)] = scalar_json(c);
    return Json{{"operad", name}, {"truncation", f.truncation()}, {"coeffs", coeffs}};
}

inline Json tree_series_json(const TreeSeries& s, int N) {
    Json coeffs = Json::object();
    for (const auto& [t, c] : s) coeffs[t.code()] = scalar_json(c);
    return Json{{"operad", "dup"}, {"truncation", N}, {"coeffs", coeffs}};
}

inline void expect_operad(const Json& j, const std::string& name) {
    const std::string got = field(j, "operad").get<std::string>();
    if (got != name) throw std::invalid_argument("operad series is over '" + got + "', expected '" + name + "'");
}

inline OperadSeries<AssocOperad> assoc_series_from_json(const Json& j) {
    expect_operad(j, "assoc");
    std::map<int, Scalar> c;
    for (const auto& [k, v] : field(j, "coeffs").items()) c[int_key(k)] = scalar_from_json(v);
    return OperadSeries<AssocOperad>(int_field(j, "truncation"), c);
}

inline OperadSeries<DupOperad> dup_series_from_json(const Json& j) {
    expect_operad(j, "dup");
    std::map<PlanarBinaryTree, Scalar> c;
    for (const auto& [k, v] : field(j, "coeffs").items()) c[PlanarBinaryTree::parse(k)] = scalar_from_json(v);
    return OperadSeries<DupOperad>(int_field(j, "truncation"), c);
}

inline TreeSeries tree_series_from_json(const Json& j) {
    expect_operad(j, "dup");
    TreeSeries s;
    for (const auto& [k, v] : field(j, "coeffs").items()) s.add(PlanarBinaryTree::parse(k), scalar_from_json(v));
    return s;
}

inline std::vector<Scalar> values_from_json(const Json& j) {
    const Json& v = field(j, "values");
    if (!v.is_array()) throw std::invalid_argument("'values' must be an array");
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(scalar_from_json(x));
    return out;
}

inline Json values_json(const std::vector<Scalar>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
}

inline Json report_json(const checks::SuiteReport& r) {
    Json items = Json::array();
    for (const auto& i : r.items)
        items.push_back(Json{{"name", i.name}, {"passed", i.passed}, {"cases", i.cases}, {"counterexample", i.counterexample}});
    return Json{{"suite", r.suite}, {"max_degree", r.max_degree}, {"passed", r.passed()}, {"checks", items}};
}

// ---------------------------------------------------------------- text rendering

namespace detail {

inline std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline bool is_leaf(const Json& j) {
    if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    return j.is_primitive();
}

inline std::string leaf_text(const Json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string s;
    for (const auto& x : j) {
        if (!s.empty()) s += "  ";
        s += scalar_text(x);
    }
    return s.empty() ? "(none)" : s;
}

inline void render(const Json& j, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        std::size_t width = 0;
        for (const auto& [k, v] : j.items())
            if (is_leaf(v)) width = std::max(width, k.size());
        if (j.empty()) out << pad << "(empty)\n";
        for (const auto& [k, v] : j.items()) {
            if (is_leaf(v)) {
                out << pad << k << std::string(width - k.size(), ' ') << "  " << leaf_text(v) << '\n';
            } else {
                out << pad << k << ":\n";
                render(v, indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        if (j.empty()) out << pad << "(none)\n";
        for (const auto& v : j) {
            if (v.is_object() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
                std::string line;
                for (const auto& [k, x] : v.items()) {
                    if (!line.empty()) line += "  ";
                    line += k + "=" + scalar_text(x);
                }
                out << pad << "- " << line << '\n';
            } else if (is_leaf(v)) {
                out << pad << "- " << leaf_text(v) << '\n';
            } else {
                out << pad << "-\n";
                render(v, indent + 2, out);
            }
        }
    } else {
        out << pad << scalar_text(j) << '\n';
    }
}

}  // namespace detail

/// Aligned, indented text rendering of a result object.
inline std::string pretty(const Json& j) {
    std::ostringstream os;
    detail::render(j, 0, os);
    return os.str();
}

// ---------------------------------------------------------------- commands

struct Options {
    std::string json_text;
    std::string input_file;
    std::string output_file;
    bool pretty = false;
};

/// Reads the command payload from --json, --input or the given stream, in that order.
inline Json read_payload(const Options& o, std::istream& in) {
    std::string text;
    if (!o.json_text.empty()) {
        text = o.json_text;
    } else if (!o.input_file.empty()) {
        std::ifstream f(o.input_file);
        if (!f) throw std::invalid_argument("cannot open input file '" + o.input_file + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    } else {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw std::invalid_argument("no input: pass --json, --input FILE, or JSON on stdin");
    return Json::parse(text);
}

/// Element string from --element or the payload's "element" field.
inline std::string element_arg(const std::string& flag, const Options& o, std::istream& in) {
    if (!flag.empty()) return flag;
    const Json p = read_payload(o, in);
    if (p.is_string()) return p.get<std::string>();
    return field(p, "element").get<std::string>();
}

inline Json coproduct_command(const std::string& algebra, const std::string& element) {
    Json out{{"algebra", algebra}, {"element", element}};
    if (algebra == "fdb" || algebra == "inv") {
        const CommHopf h(parse_comm_algebra(algebra));
        out["terms"] = tensor_json(h.coproduct(parse_monomial(element)));
    } else if (algebra == "fdbnc" || algebra == "invnc") {
        const NCHopf h(algebra == "fdbnc" ? NCAlgebra::fdb_nc : NCAlgebra::inv_nc);
        out["terms"] = tensor_json(h.coproduct(parse_word(element)));
    } else if (algebra == "rt") {
        const RTHopf h;
        out["terms"] = tensor_json(h.coproduct(Forest::parse(element)));
    } else {
        throw std::invalid_argument("unknown algebra '" + algebra + "'");
    }
    return out;
}

inline Json antipode_command(const std::string& algebra, const std::string& element, bool closed_form) {
    Json out{{"algebra", algebra}, {"element", element}};
    if (closed_form) {
        if (algebra != "fdbnc") throw std::invalid_argument("--closed-form is only available for --algebra fdbnc");
        const Word w = parse_word(element);
        if (w.size() != 1) throw std::invalid_argument("--closed-form needs a single generator such as x3");
        out["antipode"] = lincomb_json(antipode_nc_closed(w.letters.front()));
        return out;
    }
    if (algebra == "fdb" || algebra == "inv") {
        const CommHopf h(parse_comm_algebra(algebra));
        out["antipode"] = lincomb_json(h.antipode(parse_monomial(element)));
    } else if (algebra == "fdbnc" || algebra == "invnc") {
        const NCHopf h(algebra == "fdbnc" ? NCAlgebra::fdb_nc : NCAlgebra::inv_nc);
        out["antipode"] = lincomb_json(h.antipode(parse_word(element)));
    } else if (algebra == "rt") {
        const RTHopf h;
        out["antipode"] = lincomb_json(h.antipode(Forest::parse(element)));
    } else {
        throw std::invalid_argument("unknown algebra '" + algebra + "'");
    }
    return out;
}

inline Json incidence_command(const std::string& family, int n, const std::string& forest) {
    const IncidenceHopf h;
    std::map<std::string, Json> classes;
    auto label = [&](const IncMonomial& m) {
        for (const auto& c : m.factors)
            classes.emplace(to_string(c), Json{{"size", c.size()}, {"order", c.code()}});
        return to_string(m);
    };
    auto entry = [&](const IncMonomial& m) {
        return Json{{"element", label(m)}, {"coproduct", tensor_json(h.coproduct(m), label)}};
    };
    Json out{{"family", family}};
    if (family == "boolean") {
        if (n < 1) throw std::invalid_argument("--n must be >= 1");
        out["n"] = n;
        out.update(entry(factor(boolean_lattice(n))));
    } else if (family == "partitions") {
        if (n < 1) throw std::invalid_argument("--n must be >= 1");
        if (n > 5) throw std::invalid_argument("partition family supported for n <= 5");
        out["n"] = n;
        out.update(entry(IncMonomial(std::vector<PosetClass>{partition_class(n)})));
        out["fdb_image"] = tensor_json(checks::partition_coproduct_as_fdb(n));
    } else if (family == "forest") {
        if (!forest.empty()) {
            const Forest f = Forest::parse(forest);
            out["forest"] = to_string(f);
            out.update(entry(forest_to_incidence(f)));
        } else {
            if (n < 1) throw std::invalid_argument("--n must be >= 1 (or pass --forest)");
            out["n"] = n;
            Json all = Json::array();
            for (const auto& t : trees_of_degree(n)) {
                Json e = entry(forest_to_incidence(Forest(t)));
                e["tree"] = t.code();
                all.push_back(e);
            }
            out["trees"] = all;
        }
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    Json cj = Json::object();
    for (const auto& [k, v] : classes) cj[k] = v;
    out["classes"] = cj;
    return out;
}

inline Json operad_command(const std::string& action, const std::string& operad, const Json& p) {
    if (operad != "assoc" && operad != "dup") throw std::invalid_argument("unknown operad '" + operad + "'");
    if (action == "compose") {
        if (operad == "assoc")
            return operad_series_json(operad_group_compose(assoc_series_from_json(field(p, "f")), assoc_series_from_json(field(p, "g"))),
                                      "assoc");
        return operad_series_json(operad_group_compose(dup_series_from_json(field(p, "f")), dup_series_from_json(field(p, "g"))),
                                  "dup");
    }
    if (action == "project") {
        if (operad == "assoc") return series_json(assoc_to_series(assoc_series_from_json(p)));
        return series_json(order_project(dup_series_from_json(p)));
    }
    if (action == "section") {
        const TruncSeries f = series_from_json(p);
        if (operad == "assoc") return operad_series_json(series_to_assoc(f), "assoc");
        return operad_series_json(section_embed(f), "dup");
    }
    if (action == "alpha") {
        if (operad != "dup") throw std::invalid_argument("alpha is defined for --operad dup");
        const int N = int_field(p, "truncation");
        return tree_series_json(alpha_series(tree_series_from_json(p), N), N);
    }
    throw std::invalid_argument("unknown operad action '" + action + "'");
}

// ---------------------------------------------------------------- entry point

inline void write_error(std::ostream& out, const std::string& type, const std::string& message) {
    out << Json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
}

/// Exit status of `check`: 2 when any item failed.
inline int check_status(const checks::SuiteReport& r) { return r.passed() ? kOk : kCheckFailed; }

/// Runs one command line (without the program name). Output goes to `out` unless --output is given.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const Logger log(err, log_level_from_env());
    CLI::App app{"Exact Faa di Bruno toolkit: series, Hopf algebras, trees, incidence and operads", "fdb"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--json", o.json_text, "Inline JSON payload");
    app.add_option("--input", o.input_file, "Read the JSON payload from a file");
    app.add_option("--output", o.output_file, "Write the result to a file");
    app.add_flag("--pretty", o.pretty, "Aligned text instead of JSON");

    Json result;
    int status = kOk;
    std::function<void()> action;

    // series
    std::string method = "formula";
    auto* compose = app.add_subcommand("compose", "Compose diffeo series: payload {\"f\":S,\"g\":S}, result f o g");
    compose->add_option("--method", method, "formula | substitution | hopf")->check(CLI::IsMember({"formula", "substitution", "hopf"}));
    compose->callback([&] {
        action = [&] {
            const Json p = read_payload(o, in);
            const auto f = series_from_json(field(p, "f"));
            const auto g = series_from_json(field(p, "g"));
            if (method == "formula") result = series_json(fdb::compose(f, g));
            else if (method == "substitution") result = series_json(checks::compose_by_substitution(f, g));
            else result = series_json(compose_via_hopf(f, g));
        };
    });
    app.add_subcommand("invert", "Compositional inverse by back-substitution")->callback([&] {
        action = [&] { result = series_json(inverse_by_back_substitution(series_from_json(read_payload(o, in)))); };
    });
    app.add_subcommand("lagrange", "Compositional inverse by Lagrange coefficient extraction")->callback([&] {
        action = [&] { result = series_json(compositional_inverse(series_from_json(read_payload(o, in)))); };
    });
    app.add_subcommand("mulinv", "Multiplicative inverse of an invertible series")->callback([&] {
        action = [&] { result = series_json(multiplicative_inverse(series_from_json(read_payload(o, in)))); };
    });
    int bell_n = 0, bell_m = 0;
    auto* bell = app.add_subcommand("bell", "Partial Bell polynomial B_{n,m}");
    bell->add_option("n", bell_n)->required();
    bell->add_option("m", bell_m)->required();
    bell->callback([&] {
        action = [&] {
            if (bell_n < 1 || bell_m < 1 || bell_m > bell_n) throw std::invalid_argument("bell requires 1 <= m <= n");
            result = Json{{"n", bell_n}, {"m", bell_m}, {"polynomial", lincomb_json(bell_polynomial(bell_n, bell_m))}};
        };
    });
    int lambert_n = 0;
    auto* lambert = app.add_subcommand("lambert", "Coefficients g_1..g_N of the inverse of t e^t");
    lambert->add_option("N", lambert_n)->required();
    lambert->callback([&] {
        action = [&] {
            if (lambert_n < 1) throw std::invalid_argument("lambert requires N >= 1");
            result = Json{{"truncation", lambert_n}, {"coefficients", values_json(lambert_coefficients(lambert_n))}};
        };
    });
    int bm_size = 0;
    auto* bellmatrix = app.add_subcommand("bellmatrix", "Bell matrix M_ij = [t^j] g^i of a diffeo series");
    bellmatrix->add_option("--size", bm_size, "Matrix size")->required();
    bellmatrix->callback([&] {
        action = [&] {
            const auto m = bell_matrix(series_from_json(read_payload(o, in)), bm_size);
            Json rows = Json::array();
            for (int i = 1; i <= m.size(); ++i) {
                Json row = Json::array();
                for (int j = 1; j <= m.size(); ++j) row.push_back(scalar_json(m.at(i, j)));
                rows.push_back(row);
            }
            result = Json{{"size", m.size()}, {"rows", rows}};
        };
    });
    int deriv_n = 0;
    bool determinant = false;
    auto* fdbderiv = app.add_subcommand("fdbderiv", "n-th derivative of f(g(t)) in terms of f(m) and g(k)");
    fdbderiv->add_option("n", deriv_n)->required();
    fdbderiv->add_flag("--determinant", determinant, "Expand the Hessenberg determinant instead");
    fdbderiv->callback([&] {
        action = [&] {
            const auto d = determinant ? fdb_determinant(deriv_n) : fdb_derivative(deriv_n);
            result = Json{{"n", deriv_n}, {"method", determinant ? "determinant" : "bell"}, {"terms", lincomb_json(d)}};
        };
    });

    // Hopf algebras
    std::string algebra, element;
    bool closed_form = false;
    const std::vector<std::string> algebras{"fdb", "inv", "fdbnc", "invnc", "rt"};
    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
    coproduct->add_option("--algebra", algebra)->required()->check(CLI::IsMember(algebras));
    coproduct->add_option("--element", element, "Monomial (x1^2 x3), word (x1x2) or forest ([[]] [])");
    coproduct->callback([&] { action = [&] { result = coproduct_command(algebra, element_arg(element, o, in)); }; });
    auto* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
    antipode->add_option("--algebra", algebra)->required()->check(CLI::IsMember(algebras));
    antipode->add_option("--element", element, "Monomial, word or forest");
    antipode->add_flag("--closed-form", closed_form, "Closed non-commutative Lagrange formula (fdbnc generators)");
    antipode->callback([&] { action = [&] { result = antipode_command(algebra, element_arg(element, o, in), closed_form); }; });
    std::string char_algebra;
    auto* exp = app.add_subcommand("exp", "Character exp(a) from infinitesimal-character values {\"values\":[...]}");
    exp->add_option("--algebra", char_algebra)->required()->check(CLI::IsMember({"fdb", "inv"}));
    exp->callback([&] {
        action = [&] {
            const InfChar a{parse_comm_algebra(char_algebra), values_from_json(read_payload(o, in))};
            result = Json{{"algebra", char_algebra}, {"values", values_json(exp_char(a).values)}};
        };
    });
    auto* log_cmd = app.add_subcommand("log", "Infinitesimal character log(f) from character values or a series");
    log_cmd->add_option("--algebra", char_algebra)->required()->check(CLI::IsMember({"fdb", "inv"}));
    log_cmd->callback([&] {
        action = [&] {
            const Json p = read_payload(o, in);
            const CommAlgebra alg = parse_comm_algebra(char_algebra);
            Character c{alg, {}};
            if (p.contains("kind")) {
                const auto f = series_from_json(p);
                c = alg == CommAlgebra::fdb ? character_of(f) : character_of_invertible(f);
            } else {
                c.values = values_from_json(p);
            }
            result = Json{{"algebra", char_algebra}, {"values", values_json(log_char(c).values)}};
        };
    });

    // trees
    std::string tree_a, tree_b;
    auto* graft_cmd = app.add_subcommand("graft", "Pre-Lie grafting t -> u summed over vertices of u");
    graft_cmd->add_option("t", tree_a)->required();
    graft_cmd->add_option("u", tree_b)->required();
    graft_cmd->callback([&] {
        action = [&] {
            const auto t = RootedTree::parse(tree_a), u = RootedTree::parse(tree_b);
            result = Json{{"t", t.code()}, {"u", u.code()}, {"graft", lincomb_json(graft(t, u))}};
        };
    });
    auto* phi_cmd = app.add_subcommand("phi", "Pre-Lie morphism from trees to the Witt generators e_n");
    phi_cmd->add_option("t", tree_a)->required();
    phi_cmd->callback([&] {
        action = [&] {
            const auto t = RootedTree::parse(tree_a);
            result = Json{{"tree", t.code()}, {"phi", lincomb_json(phi(t))}};
        };
    });
    int psi_n = 0;
    std::string psi_monomial;
    auto* psi_cmd = app.add_subcommand("psi", "Embedding of H_FdB into H_RT in degree n");
    psi_cmd->add_option("n", psi_n)->required();
    psi_cmd->add_option("--monomial", psi_monomial, "Single monomial of degree n (default: all)");
    psi_cmd->callback([&] {
        action = [&] {
            if (psi_n < 1 || psi_n > 7) throw std::invalid_argument("psi supports 1 <= n <= 7");
            const PsiEmbedding psi(psi_n);
            Json images = Json::object();
            if (!psi_monomial.empty()) {
                const auto m = parse_monomial(psi_monomial);
                if (m.degree() != psi_n) throw std::invalid_argument("monomial degree differs from n");
                images[to_string(m)] = lincomb_json(psi(m));
            } else {
                for (const auto& m : monomials_of_degree(psi_n)) images[to_string(m)] = lincomb_json(psi(m));
            }
            result = Json{{"degree", psi_n}, {"images", images}};
        };
    });

    // incidence
    std::string family, forest;
    int inc_n = 0;
    auto* incidence = app.add_subcommand("incidence", "Incidence coproduct on a poset family member");
    incidence->add_option("--family", family)->required()->check(CLI::IsMember({"boolean", "partitions", "forest"}));
    incidence->add_option("--n", inc_n, "Family index (boolean B_n, partitions of n+1 points, trees of degree n)");
    incidence->add_option("--forest", forest, "Forest for the ideal-lattice family");
    incidence->callback([&] {
        action = [&] {
            if (family != "forest" && inc_n == 0) throw std::invalid_argument("--n is required for this family");
            result = incidence_command(family, inc_n, forest);
        };
    });

    // operads
    std::string operad_action, operad;
    auto* operad_cmd = app.add_subcommand("operad", "Operadic group computations");
    operad_cmd->add_option("action", operad_action)->required()->check(CLI::IsMember({"compose", "project", "section", "alpha"}));
    operad_cmd->add_option("--operad", operad)->required()->check(CLI::IsMember({"assoc", "dup"}));
    operad_cmd->callback([&] { action = [&] { result = operad_command(operad_action, operad, read_payload(o, in)); }; });

    // checks
    std::string suite;
    int max_degree = 0;
    auto* check = app.add_subcommand("check", "Run a named invariant suite");
    check->add_option("suite", suite)->required()->check(CLI::IsMember(checks::suite_names()));
    check->add_option("--max-degree", max_degree)->required();
    check->callback([&] {
        action = [&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto r = checks::run_suite(suite, max_degree);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            log(LogLevel::info, "suite " + suite + " took " + std::to_string(secs) + "s");
            result = report_json(r);
            status = check_status(r);
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        write_error(out, "usage", e.what());
        return kBadInput;
    }

    try {
        log(LogLevel::debug, "running " + app.get_subcommands().front()->get_name());
        action();
    } catch (const Json::exception& e) {
        write_error(out, "json", e.what());
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        write_error(out, "invalid_argument", e.what());
        return kBadInput;
    } catch (const std::domain_error& e) {
        write_error(out, "domain_error", e.what());
        return kBadInput;
    } catch (const std::out_of_range& e) {
        write_error(out, "out_of_range", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        write_error(out, "internal", e.what());
        return kBadInput;
    }

    const std::string text = o.pretty ? pretty(result) : result.dump() + "\n";
    if (!o.output_file.empty()) {
        std::ofstream f(o.output_file);
        if (!f) {
            write_error(out, "io", "cannot open output file '" + o.output_file + "'");
            return kBadInput;
        }
        f << text;
    } else {
        out << text;
    }
    return status;
}

}  // namespace fdb::cli
