#include "ck/characters.hpp"
#include "ck/errors.hpp"
#include "ck/json_io.hpp"
#include "ck/kernels.hpp"
#include "ck/keypoly.hpp"
#include "ck/scalarprod.hpp"
#include "ck/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << text << "\n";
    }
};

std::string render_poly(const ck::LaurentPoly& f, const std::string& format) {
    if (format == "pretty") return f.to_pretty();
    return ck::poly_to_json(f).dump(2);
}

std::string render_series(const ck::TruncatedSeries& s, const std::string& format) {
    if (format == "pretty") {
        std::ostringstream out;
        for (int d = 0; d <= s.maxdeg; ++d) {
            if (d) out << "\n";
            out << "deg " << d << ": " << s.slices[d].to_pretty();
        }
        return out.str();
    }
    return ck::series_to_json(s).dump(2);
}

ck::LaurentPoly maybe_specialize_beta(ck::LaurentPoly f, const std::string& beta) {
    if (beta == "symbolic" || !f.varset()->has("beta")) return f;
    return f.substitute("beta", ck::rat_from_string(beta));
}

ck::LaurentPoly load_poly_arg(const std::string& arg, const ck::VarSetPtr& vs) {
    // file path containing polynomial JSON, "-" for stdin, or an inline
    // expression like "x1^2 - 2*x2"
    if (arg == "-") {
        json j = json::parse(std::cin);
        return ck::poly_from_json(j);
    }
    std::ifstream in(arg);
    if (in) {
        json j = json::parse(in);
        return ck::poly_from_json(j);
    }
    return ck::parse_poly(vs, arg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernels, key polynomials and scalar products of the classical groups"};
    app.require_subcommand(1);

    std::string type_name = "C";
    int n = 2;
    int maxdeg = 4;
    int bound = 2;
    int trials = 100;
    std::uint64_t seed = 20060607;
    std::string beta = "symbolic";
    std::string format = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or pretty")
            ->check(CLI::IsMember({"json", "pretty"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    // key
    std::string key_index;
    auto* cmd_key = app.add_subcommand("key", "key polynomial for an index type:v1,...,vn[:hat]");
    cmd_key->add_option("index", key_index, "e.g. A:0,1 or BC:-1,2:hat")->required();
    cmd_key->add_option("--beta", beta, "rational value or 'symbolic'");
    add_common(cmd_key);

    // character
    std::string lambda_str;
    auto* cmd_char = app.add_subcommand("character", "classical character of a partition");
    cmd_char->add_option("--type", type_name, "A, B, C or D");
    cmd_char->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
    cmd_char->add_option("--n", n, "rank");
    add_common(cmd_char);

    // denominator
    std::string form = "product";
    auto* cmd_den = app.add_subcommand("denominator", "group-alternating denominator");
    cmd_den->add_option("--type", type_name, "A, B, C or D");
    cmd_den->add_option("--n", n, "rank");
    cmd_den->add_option("--form", form, "sum or product")
        ->check(CLI::IsMember({"sum", "product"}));
    add_common(cmd_den);

    // kernel
    auto* cmd_kernel = app.add_subcommand("kernel", "truncated kernel expansion");
    cmd_kernel->add_option("--type", type_name, "A, B, C, D or BC");
    cmd_kernel->add_option("--n", n, "rank");
    cmd_kernel->add_option("--maxdeg", maxdeg, "x-degree cutoff");
    cmd_kernel->add_option("--beta", beta, "rational value or 'symbolic'");
    add_common(cmd_kernel);

    // scalar
    std::string f_arg, g_arg;
    auto* cmd_scalar = app.add_subcommand("scalar", "constant-term pairing of two polynomials");
    cmd_scalar->add_option("--type", type_name, "A, B, C, D or BC");
    cmd_scalar->add_option("--n", n, "rank");
    cmd_scalar->add_option("--f", f_arg, "polynomial: JSON file, '-' or expression")->required();
    cmd_scalar->add_option("--g", g_arg, "polynomial: JSON file, '-' or expression")->required();
    cmd_scalar->add_option("--beta", beta, "rational value or 'symbolic'");
    add_common(cmd_scalar);

    // gram
    auto* cmd_gram = app.add_subcommand("gram", "orthogonality matrix of the two key families");
    cmd_gram->add_option("--type", type_name, "A, B, C, D or BC");
    cmd_gram->add_option("--n", n, "rank");
    cmd_gram->add_option("--bound", bound, "index weight bound");
    add_common(cmd_gram);

    // verify
    std::string identity;
    auto* cmd_verify = app.add_subcommand("verify", "run one identity check");
    cmd_verify->add_option("identity", identity, "identity name")->required();
    cmd_verify->add_option("--type", type_name, "A, B, C, D or BC");
    cmd_verify->add_option("--n", n, "rank");
    cmd_verify->add_option("--maxdeg", maxdeg, "x-degree cutoff");
    cmd_verify->add_option("--bound", bound, "index/window bound");
    cmd_verify->add_option("--trials", trials, "random trials per relation");
    cmd_verify->add_option("--seed", seed, "random seed");
    add_common(cmd_verify);

    CLI11_PARSE(app, argc, argv);

    Output out{out_path};
    try {
        if (cmd_key->parsed()) {
            ck::KeyIndex idx = ck::parse_key_index(key_index);
            auto vs = idx.type == ck::GroupType::BC
                          ? ck::make_vars(static_cast<int>(idx.v.size()), false, {"beta"})
                          : ck::make_vars(static_cast<int>(idx.v.size()));
            ck::KeyTable keys(vs, 'x');
            out.write(render_poly(maybe_specialize_beta(keys.key(idx), beta), format));
        } else if (cmd_char->parsed()) {
            ck::Partition lambda;
            std::istringstream in(lambda_str);
            std::string item;
            while (std::getline(in, item, ',')) lambda.push_back(std::stoi(item));
            auto f = ck::character(ck::group_type_from_string(type_name), lambda, n);
            out.write(render_poly(f, format));
        } else if (cmd_den->parsed()) {
            auto f = ck::weyl_denominator(ck::group_type_from_string(type_name), n,
                                          form == "sum" ? ck::DenominatorForm::Sum
                                                        : ck::DenominatorForm::Product);
            out.write(render_poly(f, format));
        } else if (cmd_kernel->parsed()) {
            auto s = ck::kernel_series(ck::group_type_from_string(type_name), n, maxdeg);
            if (beta != "symbolic") s = ck::substitute(s, "beta", ck::rat_from_string(beta));
            out.write(render_series(s, format));
        } else if (cmd_scalar->parsed()) {
            ck::ScalarProduct sp(ck::group_type_from_string(type_name), n);
            ck::LaurentPoly f = load_poly_arg(f_arg, sp.varset());
            ck::LaurentPoly g = load_poly_arg(g_arg, sp.varset());
            ck::LaurentPoly s = maybe_specialize_beta(sp.scalar(f, g), beta);
            if (sp.type() == ck::GroupType::BC && beta == "symbolic") {
                out.write(render_poly(s.project(ck::VarSet::make({"beta"})), format));
            } else {
                out.write(ck::rat_to_string(s.constant_coefficient()));
            }
        } else if (cmd_gram->parsed()) {
            ck::ScalarProduct sp(ck::group_type_from_string(type_name), n);
            ck::GramMatrix m = sp.gram(bound);
            out.write(ck::gram_to_json(m).dump(2));
        } else if (cmd_verify->parsed()) {
            ck::VerifyConfig cfg;
            cfg.type = ck::group_type_from_string(type_name);
            cfg.n = n;
            cfg.maxdeg = maxdeg;
            cfg.bound = bound;
            cfg.trials = trials;
            cfg.seed = seed;
            ck::VerificationReport rep = ck::run_verify(identity, cfg);
            if (format == "pretty") {
                std::ostringstream txt;
                txt << rep.identity << ": " << (rep.pass ? "pass" : "fail");
                if (!rep.pass) txt << "\n" << rep.counterexample.dump(2);
                out.write(txt.str());
            } else {
                out.write(rep.to_json().dump(2));
            }
            return rep.pass ? 0 : 1;
        }
    } catch (const ck::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
