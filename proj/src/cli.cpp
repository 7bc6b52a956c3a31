#include "xsym/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xsym/amazing.hpp"
#include "xsym/elimination.hpp"
#include "xsym/minors.hpp"
#include "xsym/network.hpp"
#include "xsym/random_tnn.hpp"
#include "xsym/serialize.hpp"

namespace xsym {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << bytes;
    if (!f) throw IoError("failed writing '" + path + "'");
}

std::uint64_t seed_from_text(const std::string& text) {
    const bool numeric =
        !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
    if (numeric) return std::stoull(text);
    return std::stoull(fnv1a_hex(text), nullptr, 16);
}

template <class S>
using Trace = std::vector<ElementaryStep<S>>;

template <class S>
int report(const Verdict<S>& v, const Trace<S>* trace, std::ostream& out) {
    if (const auto* ok = std::get_if<TotallyNonnegative<S>>(&v)) {
        out << "verdict: certified\n";
        if (ok->factorization) {
            out << "atoms: " << ok->factorization->atoms.size() << "\n";
            out << "diagonal:";
            for (const auto& d : ok->factorization->diagonal) out << ' ' << d.to_string();
            out << "\n";
        }
    } else if (const auto* no = std::get_if<NotTnn<S>>(&v)) {
        out << "verdict: refuted\n";
        out << "witness: " << describe(no->witness.reason) << "\n";
    } else {
        out << "verdict: inapplicable\n";
        out << "reason: " << describe(std::get<Inapplicable>(v).reason) << "\n";
    }
    if (trace != nullptr) {
        out << "trace:\n";
        for (std::size_t k = 0; k < trace->size(); ++k) {
            const auto& st = (*trace)[k];
            out << "  step " << k + 1 << ": s=" << st.s << " t=" << st.t << " c=" << st.c.to_string()
                << (st.is_center ? " center" : "") << "\n";
        }
    }
    if (is_tnn(v)) return kExitOk;
    return is_not_tnn(v) ? kExitRefuted : kExitInapplicable;
}

template <class S, class Signs>
int check_matrix(const Matrix<S>& m, const std::string& method, bool trace, const Signs& signs, std::ostream& out) {
    out << "method: " << method << "\n";
    if (method == "cross") {
        const auto run = eliminate_traced(m, signs);
        return report(run.verdict, trace ? &run.steps : nullptr, out);
    }
    const Trace<S>* none = nullptr;
    if (method == "neville") return report(neville_tnn_test(m, signs), none, out);
    try {
        return report(brute_force_tnn(m, signs), none, out);
    } catch (const InconclusiveMinor& e) {
        out << "verdict: inapplicable\nreason: " << e.what() << "\n";
        return kExitInapplicable;
    }
}

// Certificate for a rational matrix, or the exit code explaining why none exists.
std::variant<Factorization<Rational>, int> certify(const Matrix<Rational>& m, std::ostream& err) {
    const auto v = cross_symmetric_eliminate(m);
    if (const auto* ok = std::get_if<TotallyNonnegative<Rational>>(&v)) return *ok->factorization;
    if (const auto* no = std::get_if<NotTnn<Rational>>(&v)) {
        err << "not totally nonnegative: " << describe(no->witness.reason) << "\n";
        return kExitRefuted;
    }
    err << "inapplicable: " << describe(std::get<Inapplicable>(v).reason) << "\n";
    return kExitInapplicable;
}

struct Options {
    std::vector<long> amazing;
    std::vector<std::string> random;
    bool scaled = false;
    bool json = false;
    std::string output;
    std::string cert_path;

    std::string input;
    std::string method = "cross";
    bool trace = false;
    long beta = 2;

    bool verify = false;
    std::string format = "dot";

    long verify_n = 0;
    unsigned escalation_cap = 3;
};

int cmd_gen(const Options& o, std::ostream& out) {
    if (o.amazing.empty() == o.random.empty()) throw UsageError("gen needs exactly one of --amazing or --random");
    Matrix<Rational> m;
    std::optional<Factorization<Rational>> cert;
    if (!o.amazing.empty()) {
        if (o.amazing[0] < 1) throw UsageError("--amazing: n must be at least 1");
        if (o.amazing[1] < 2) throw UsageError("--amazing: base b must be at least 2");
        m = amazing_matrix({static_cast<std::size_t>(o.amazing[0]), o.amazing[1], o.scaled});
    } else {
        long n = 0, atoms = 0;
        try {
            n = std::stol(o.random[1]);
            atoms = std::stol(o.random[2]);
        } catch (const std::exception&) {
            throw UsageError("--random expects SEED N ATOMS");
        }
        if (n < 1 || atoms < 0) throw UsageError("--random: need n >= 1 and atoms >= 0");
        auto sample = random_certified_tnn(static_cast<std::size_t>(n), seed_from_text(o.random[0]),
                                           static_cast<std::size_t>(atoms));
        m = std::move(sample.matrix);
        cert = std::move(sample.certificate);
    }
    write_output(o.output, o.json ? to_json_text(matrix_to_json(m)) : write_matrix_text(m), out);
    if (cert) {
        std::string path = o.cert_path;
        if (path.empty() && !o.output.empty() && o.output != "-") path = o.output + ".cert.json";
        if (!path.empty()) write_output(path, to_json_text(factorization_to_json(*cert)), out);
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto any = parse_any_matrix(read_file(o.input));
    if (const auto* m = std::get_if<Matrix<Rational>>(&any)) return check_matrix(*m, o.method, o.trace, RationalSigns{}, out);
    if (o.beta < 1) throw UsageError("--beta must be at least 1");
    out << "ray: b >= " << o.beta << "\n";
    return check_matrix(std::get<Matrix<RatFunc>>(any), o.method, o.trace, RaySigns{o.beta}, out);
}

int cmd_factor(const Options& o, std::ostream& out, std::ostream& err) {
    const auto m = parse_rational_matrix(read_file(o.input));
    auto result = certify(m, err);
    if (const int* code = std::get_if<int>(&result)) return *code;
    const auto& f = std::get<Factorization<Rational>>(result);
    if (o.verify && !(factorization_product(f) == m)) {
        err << "verification failed: product of the certificate differs from the input\n";
        return kExitInapplicable;
    }
    write_output(o.output, to_json_text(factorization_to_json(f)), out);
    if (o.verify) err << "verified: certificate multiplies back to the input\n";
    return kExitOk;
}

int cmd_network(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(o.input);
    Factorization<Rational> f;
    const auto first = text.find_first_not_of(" \t\r\n");
    bool is_cert = false;
    if (first != std::string::npos && text[first] == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception& e) {
            throw FormatError(std::string("invalid document: ") + e.what());
        }
        if (doc.contains("atoms")) {
            f = factorization_from_json(doc);
            is_cert = true;
        }
    }
    if (!is_cert) {
        auto result = certify(parse_rational_matrix(text), err);
        if (const int* code = std::get_if<int>(&result)) return *code;
        f = std::get<Factorization<Rational>>(result);
    }
    const auto net = network_from_factorization(f);
    if (o.format == "dot") {
        write_output(o.output, export_dot(net), out);
    } else {
        write_output(o.output, to_json_text(network_to_json(net)), out);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.verify_n < 1) throw UsageError("--n must be at least 1");
    const auto r = verify_amazing(static_cast<std::size_t>(o.verify_n), o.escalation_cap);
    const std::string doc = to_json_text(report_to_json(r));
    if (o.output.empty() || o.output == "-") {
        out << doc;
    } else {
        write_output(o.output, doc, out);
        out << "n=" << r.n << " overall: " << to_string(r.overall) << "\n";
    }
    switch (r.overall) {
        case Coverage::Certified: return kExitOk;
        case Coverage::Refuted: return kExitRefuted;
        case Coverage::Partial: return kExitInapplicable;
    }
    return kExitInapplicable;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact total-nonnegativity tests for cross-symmetric matrices", "xsym"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate an Amazing Matrix or a random certified matrix");
    gen->add_option("--amazing", o.amazing, "N B: Amazing Matrix of size N in base B")->expected(2);
    gen->add_option("--random", o.random, "SEED N ATOMS: random certified product")->expected(3);
    gen->add_flag("--scaled", o.scaled, "Multiply Amazing Matrix entries by b^n");
    gen->add_flag("--json", o.json, "Write the {n, entries} document instead of text");
    gen->add_option("-o,--output", o.output, "Output path (default stdout)");
    gen->add_option("--cert", o.cert_path, "Certificate path for --random (default OUTPUT.cert.json)");

    auto* check = app.add_subcommand("check", "Test a matrix for total nonnegativity");
    check->add_option("path", o.input, "Matrix file")->required();
    check->add_option("--method", o.method, "cross, neville or minors")
        ->check(CLI::IsMember({"cross", "neville", "minors"}));
    check->add_flag("--trace", o.trace, "Print the elimination steps (cross method)");
    check->add_option("--beta", o.beta, "Ray start for symbolic matrices (default 2)");

    auto* factor = app.add_subcommand("factor", "Write the atom factorization certificate");
    factor->add_option("path", o.input, "Matrix file")->required();
    factor->add_option("-o,--out", o.output, "Certificate path (default stdout)");
    factor->add_flag("--verify", o.verify, "Re-multiply the certificate and compare exactly");

    auto* network = app.add_subcommand("network", "Render a certificate as a weighted planar network");
    network->add_option("path", o.input, "Matrix file or certificate document")->required();
    network->add_option("--format", o.format, "dot or doc")->check(CLI::IsMember({"dot", "doc"}));
    network->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify-amazing", "Certify the Amazing Matrix of size N for every base");
    verify->add_option("--n", o.verify_n, "Matrix size")->required();
    verify->add_option("--escalation-cap", o.escalation_cap, "Maximum ray-raising rounds (default 3)");
    verify->add_option("-o,--output", o.output, "Report path (default stdout)");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (factor->parsed()) return cmd_factor(o, out, err);
        if (network->parsed()) return cmd_network(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitIo;
    } catch (const ArithmeticError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace xsym
