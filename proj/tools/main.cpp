// Command-line surface: validation, integration, circle spaces, partition
// values, reflection-positivity checks, and the structure-class table.
//
// Exit codes: 0 success / positive verdict, 1 validation failure or
// not-positive verdict, 2 input errors.

#include <spinstat/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

namespace {

using namespace spinstat;

enum class Format { Human, Machine };

struct Options {
    std::string input;
    Format format = Format::Human;
    int genus = 1;
    RouteOverride route = RouteOverride::Auto;
};

constexpr const char* kCatalogPrefix = "catalog:";

std::string read_input_text(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open file: " + input);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Loads a theory/algebra description from "catalog:NAME" or a file path.
ParsedDocument load(const std::string& input) {
    if (input.rfind(kCatalogPrefix, 0) == 0) {
        std::string name = input.substr(std::string(kCatalogPrefix).size());
        ParsedDocument doc;
        doc.spec = catalog_entry(name);
        doc.has_kind = true;
        return doc;
    }
    return parse_document(read_input_text(input));
}

std::string vec_str(const Vec& v) { return to_string(v); }

void print_kv(const std::string& k, const std::string& v) { std::cout << k << "=" << v << "\n"; }

int run_validate(const Options& opt) {
    ParsedDocument doc = load(opt.input);
    ValidationReport rep = validate_algebra(doc.spec.algebra);
    if (rep.ok() && doc.spec.star) {
        ValidationReport srep = validate_star(doc.spec.algebra, *doc.spec.star);
        for (auto& v : srep.violations) rep.add("star/" + v.code, v.detail);
    }
    if (rep.ok() && doc.spec.trace) {
        ValidationReport frep = validate_frobenius(doc.spec.frobenius());
        for (auto& v : frep.violations) rep.add("frobenius/" + v.code, v.detail);
    }
    if (rep.ok() && doc.spec.spin) {
        ValidationReport vrep = validate_spin(doc.spec.algebra, *doc.spec.spin, doc.spec.reality,
                                              doc.spec.star ? &*doc.spec.star : nullptr);
        for (auto& v : vrep.violations) rep.add("spin/" + v.code, v.detail);
        print_kv("quotient_dim", std::to_string(doc.spec.spin->quotient.space.dim()));
        std::string basis;
        for (int q = 0; q < doc.spec.spin->quotient.space.dim(); ++q) {
            int idx = doc.spec.spin->quotient.space.class_cols[static_cast<std::size_t>(q)];
            if (q) basis += ",";
            basis += "e^" + std::to_string(idx / doc.spec.algebra.dim) + "*e^" +
                     std::to_string(idx % doc.spec.algebra.dim);
        }
        print_kv("quotient_basis", "[" + basis + "]");
    }
    if (rep.ok() && doc.spec.spinstat) {
        ValidationReport vrep = validate_spinstat(doc.spec.algebra, *doc.spec.spinstat, doc.spec.reality,
                                                  doc.spec.star ? &*doc.spec.star : nullptr);
        for (auto& v : vrep.violations) rep.add("spinstat/" + v.code, v.detail);
    }
    if (rep.ok() && doc.has_kind) {
        try {
            build_theory(doc.spec);
        } catch (const validation_failed_error& e) {
            rep.add("theory", e.what());
        } catch (const kind_payload_mismatch_error& e) {
            rep.add("kind", e.what());
        }
    }
    print_kv("valid", rep.ok() ? "true" : "false");
    for (const auto& v : rep.violations) print_kv("violation", v.code + ": " + v.detail);
    return rep.ok() ? 0 : 1;
}

/// The even Frobenius data a kind integrates to (identity for section-1 kinds).
IntegratedTheory integrated_data(const TheorySpec& spec) {
    switch (spec.kind) {
        case TheoryKind::HermitianSpin:
        case TheoryKind::TwistedHermitianSpin:
            return spins_to_or(spec.algebra, *spec.spin, &*spec.star, spec.reality);
        case TheoryKind::HermitianSpinStatistics:
        case TheoryKind::TwistedHermitianSpinStatistics:
            return spinstats_to_or(spec.algebra, *spec.spinstat, &*spec.star);
        case TheoryKind::RealSpinStatistics:
            return spinstats_to_or(spec.algebra, *spec.spinstat);
        default: {
            IntegratedTheory ib;
            ib.frob = spec.frobenius();
            ib.star = spec.star;
            return ib;
        }
    }
}

int run_integrate(const Options& opt) {
    ParsedDocument doc = load(opt.input);
    TheorySpec spec = build_theory(doc.spec);
    if (spec.is_zero_theory()) {
        print_kv("dim", "0");
        return 0;
    }
    IntegratedTheory ib = integrated_data(spec);
    print_kv("dim", std::to_string(ib.frob.algebra.dim));
    print_kv("semisimple", is_semisimple(ib.frob.algebra) ? "true" : "false");
    print_kv("center_dim", std::to_string(center(ib.frob.algebra).size()));
    print_kv("trace", vec_str(ib.frob.trace.covector));
    print_kv("trace_gram", to_string(ib.frob.gram()));
    if (spec.kind == TheoryKind::Oriented) {
        FrobeniusAlgebra doubled = or_double(ib.frob);
        print_kv("or_double_dim", std::to_string(doubled.algebra.dim));
    }
    return 0;
}

int run_hilbert(const Options& opt) {
    ParsedDocument doc = load(opt.input);
    TheorySpec spec = build_theory(doc.spec);
    if (spec.is_zero_theory()) {
        print_kv("dim", "0");
        return 0;
    }
    RpResult r = is_reflection_positive(spec, opt.route);
    print_kv("dim", std::to_string(r.circle.dim));
    print_kv("tag", reality_tag_name(r.circle.tag));
    print_kv("gram", to_string(r.circle.gram));
    if (!r.circle.parity.empty()) {
        std::string p = "[";
        for (std::size_t k = 0; k < r.circle.parity.size(); ++k) {
            if (k) p += ",";
            p += std::to_string(r.circle.parity[k]);
        }
        print_kv("parity", p + "]");
    }
    return 0;
}

int run_partition(const Options& opt) {
    ParsedDocument doc = load(opt.input);
    TheorySpec spec = build_theory(doc.spec);
    if (spec.is_zero_theory()) {
        print_kv("value", "0");
        return 0;
    }
    IntegratedTheory ib = integrated_data(spec);
    PartitionResult pr = partition_genus(ib.frob, opt.genus);
    print_kv("genus", std::to_string(opt.genus));
    print_kv("value", to_string(pr.value));
    print_kv("route", pr.via_center ? "center" : "direct");
    return 0;
}

int run_check_rp(const Options& opt) {
    ParsedDocument doc = load(opt.input);
    TheorySpec spec = build_theory(doc.spec);
    RpResult r = is_reflection_positive(spec, opt.route);
    if (opt.format == Format::Human) {
        std::cout << "kind:    " << kind_name(spec.kind) << "\n";
        std::cout << "route:   " << r.route << "\n";
        std::cout << "gram:    " << to_string(r.circle.gram) << "\n";
        std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
        if (r.witness) std::cout << "witness: " << vec_str(*r.witness) << "\n";
    } else {
        print_kv("kind", kind_name(spec.kind));
        print_kv("route", r.route);
        print_kv("gram", to_string(r.circle.gram));
        print_kv("verdict", verdict_name(r.verdict));
        print_kv("witness", r.witness ? vec_str(*r.witness) : "none");
    }
    return r.verdict == RpVerdict::NotPositive ? 1 : 0;
}

int run_classify(const Options&) {
    for (const auto& c : enumerate_etale_spin_classes()) {
        std::cout << "class=(" << c.conj_equals_reversal << "," << c.parity_equals_twist << ","
                  << c.mixing << ") name=" << c.name << " kind=" << kind_name(c.kind)
                  << (c.distinguished ? " distinguished=true" : "") << "\n";
    }
    return 0;
}

int run_catalog(const Options& opt) {
    if (opt.input.empty() || opt.input == "list") {
        for (const auto& name : catalog_names())
            std::cout << name << ": " << catalog_description(name) << "\n";
        return 0;
    }
    if (opt.input == "sweep") {
        for (const auto& name : catalog_names()) {
            TheorySpec spec = catalog_entry(name);
            RpResult r = is_reflection_positive(spec);
            std::cout << "name=" << name << " verdict=" << verdict_name(r.verdict) << "\n";
        }
        return 0;
    }
    // print the serialized entry
    std::cout << serialize_theory(catalog_entry(opt.input));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2d TQFT classification data and reflection-positivity checks"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, Format> fmt_map{{"human", Format::Human}, {"machine", Format::Machine}};
    std::map<std::string, RouteOverride> route_map{{"auto", RouteOverride::Auto},
                                                   {"oriented", RouteOverride::Oriented},
                                                   {"hermitian", RouteOverride::Hermitian}};

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("input", opt.input, "description file path or catalog:NAME")->required();
        sub->add_option("--format", opt.format, "output format")
            ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));
    };

    CLI::App* validate = app.add_subcommand("validate", "run the validators on a description file");
    add_common(validate);
    CLI::App* integrate = app.add_subcommand("integrate", "integrate over the kind's structure space");
    add_common(integrate);
    CLI::App* hilbert = app.add_subcommand("hilbert", "print the circle state space");
    add_common(hilbert);
    hilbert->add_option("--route", opt.route, "route override")
        ->transform(CLI::CheckedTransformer(route_map, CLI::ignore_case));
    CLI::App* partition = app.add_subcommand("partition", "genus-g partition value");
    add_common(partition);
    partition->add_option("--genus", opt.genus, "genus (default 1)")->check(CLI::NonNegativeNumber);
    CLI::App* checkrp = app.add_subcommand("check-rp", "decide reflection positivity");
    add_common(checkrp);
    checkrp->add_option("--route", opt.route, "route override")
        ->transform(CLI::CheckedTransformer(route_map, CLI::ignore_case));
    CLI::App* classify = app.add_subcommand("classify-structures", "list the eight structure classes");
    add_common(classify, false);
    CLI::App* cat = app.add_subcommand("catalog", "list/print/sweep the built-in catalog");
    cat->add_option("input", opt.input, "list | sweep | entry name");
    cat->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(opt);
        if (integrate->parsed()) return run_integrate(opt);
        if (hilbert->parsed()) return run_hilbert(opt);
        if (partition->parsed()) return run_partition(opt);
        if (checkrp->parsed()) return run_check_rp(opt);
        if (classify->parsed()) return run_classify(opt);
        if (cat->parsed()) return run_catalog(opt);
    } catch (const syntax_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scalar_format_error& e) {
        std::cerr << "error: scalar format: " << e.what() << "\n";
        return 2;
    } catch (const unknown_catalog_entry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_failed_error& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return 1;
    } catch (const kind_payload_mismatch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
