#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "srr/bijections.hpp"
#include "srr/catalog.hpp"
#include "srr/classes.hpp"
#include "srr/harness.hpp"
#include "srr/ids.hpp"
#include "srr/partition.hpp"
#include "srr/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string known_ids_hint()
{
    std::string out = "known identities:";
    for (srr::IdentityId id : srr::all_identity_ids()) out += " " + std::string(to_string(id));
    return out;
}

std::string known_classes_hint()
{
    std::string out = "known classes:";
    for (srr::ClassId id : srr::all_class_ids()) out += " " + std::string(to_string(id));
    return out;
}

std::string known_maps_hint()
{
    std::string out = "known maps:";
    for (srr::MapId id : srr::all_map_ids()) out += " " + std::string(to_string(id));
    return out;
}

std::string known_mutations_hint()
{
    std::string out = "known mutations:";
    for (srr::MutationId id : srr::all_mutations()) out += " " + std::string(to_string(id));
    return out;
}

// Unambiguous shorthands for the four identities whose name is just the
// class name.
std::optional<srr::IdentityId> resolve_identity(const std::string& s)
{
    if (const auto id = srr::parse_identity_id(s)) return id;
    if (s == "P") return srr::IdentityId::P_SIGNED;
    if (s == "D") return srr::IdentityId::D_SIGNED;
    if (s == "RR1") return srr::IdentityId::RR1_SIGNED;
    if (s == "RR2") return srr::IdentityId::RR2_SIGNED;
    return std::nullopt;
}

int run_coeffs(const std::string& identity_s, const std::string& side, int max_n,
               const std::string& format, const std::string& class_s)
{
    const auto id = resolve_identity(identity_s);
    if (!id) {
        std::cerr << "unknown identity '" << identity_s << "'; " << known_ids_hint() << "\n";
        return kExitUsage;
    }
    if (max_n < 0) {
        std::cerr << "--max must be >= 0\n";
        return kExitUsage;
    }

    std::vector<std::string> values;
    std::string count_class_name;  // nonempty for the count sides
    if (side == "sum" || side == "product") {
        const srr::TruncatedSeries series =
            side == "sum" ? srr::sum_side(*id, max_n) : srr::product_side(*id, max_n);
        values = srr::coefficient_strings(series);
    } else {
        const auto& desc = srr::descriptor(*id);
        srr::ClassId cls;
        if (side == "ordinary-count") {
            cls = desc.ordinary;
        } else if (!class_s.empty()) {
            const auto parsed = srr::parse_class_id(class_s);
            if (!parsed || srr::side_of(*parsed) != srr::Side::Signed) {
                std::cerr << "unknown signed class '" << class_s << "'; " << known_classes_hint()
                          << "\n";
                return kExitUsage;
            }
            cls = *parsed;
        } else {
            if (desc.signed_classes.empty()) {
                std::cerr << "identity " << identity_s << " has no signed class\n";
                return kExitUsage;
            }
            cls = desc.signed_classes.front();
        }
        count_class_name = std::string(to_string(cls));
        for (int n = 0; n <= max_n; ++n)
            values.push_back(std::to_string(srr::count_class(cls, n)));
    }

    if (format == "json") {
        nlohmann::json out = {{"identity", std::string(to_string(*id))},
                              {"side", side},
                              {"max", max_n},
                              {"coefficients", values}};
        if (!count_class_name.empty()) out["class"] = count_class_name;
        std::cout << out.dump(2) << "\n";
    } else if (count_class_name.empty()) {
        std::cout << "n,coefficient\n";
        for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << "," << values[n] << "\n";
    } else {
        std::cout << "class_id,n,count\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            std::cout << count_class_name << "," << n << "," << values[n] << "\n";
    }
    return kExitOk;
}

int run_enumerate(const std::string& class_s, int n, const std::string& format)
{
    const auto id = srr::parse_class_id(class_s);
    if (!id) {
        std::cerr << "unknown class '" << class_s << "'; " << known_classes_hint() << "\n";
        return kExitUsage;
    }
    if (n < 0) {
        std::cerr << "--n must be >= 0\n";
        return kExitUsage;
    }

    std::vector<std::string> members;
    if (srr::side_of(*id) == srr::Side::Ordinary)
        for (const auto& p : srr::enumerate_class_ordinary(*id, n)) members.push_back(srr::format(p));
    else
        for (const auto& s : srr::enumerate_class_signed(*id, n)) members.push_back(srr::format(s));

    if (format == "json") {
        nlohmann::json out = {{"class", class_s}, {"n", n}, {"count", members.size()},
                              {"members", members}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& m : members) std::cout << m << "\n";
    }
    return kExitOk;
}

int run_biject(const std::string& map_s, bool inverse, const std::string& input)
{
    const auto id = srr::parse_map_id(map_s);
    if (!id) {
        std::cerr << "unknown map '" << map_s << "'; " << known_maps_hint() << "\n";
        return kExitUsage;
    }
    try {
        if (inverse) {
            const srr::SignedPartition in = srr::parse_signed_partition(input);
            std::cout << srr::format(srr::apply_inverse(*id, in)) << "\n";
        } else {
            const srr::Partition in = srr::parse_partition(input);
            std::cout << srr::format(srr::apply_forward(*id, in)) << "\n";
        }
    } catch (const srr::parse_error& e) {
        std::cerr << "malformed input at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const srr::map_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

void print_report_text(const srr::VerificationReport& report)
{
    std::cout << "[" << report.status() << "] " << report.subject << " " << report.check
              << " (n <= " << report.range_hi << ")";
    if (!report.note.empty()) std::cout << "  -- " << report.note;
    std::cout << "\n";
    for (const auto& f : report.failures) {
        std::cout << "    n=" << f.n << ": " << f.oracle_a << " = " << f.value_a << ", "
                  << f.oracle_b << " = " << f.value_b << "  [" << f.witness << "]\n";
    }
}

int run_verify(const std::string& identity_s, bool all, int max_n, int series_max, int bij_max,
               const std::string& format, const std::string& mutate_s)
{
    if (!all && identity_s.empty()) {
        std::cerr << "verify needs --identity ID or --all\n";
        return kExitUsage;
    }
    if (max_n < 0 || series_max < 0 || bij_max < 0) {
        std::cerr << "bounds must be >= 0\n";
        return kExitUsage;
    }

    srr::ClassSystem sys = srr::ClassSystem::standard();
    if (!mutate_s.empty()) {
        bool found = false;
        for (srr::MutationId m : srr::all_mutations()) {
            if (to_string(m) == mutate_s) {
                sys = sys.mutated(m);
                found = true;
                break;
            }
        }
        if (!found) {
            std::cerr << "unknown mutation '" << mutate_s << "'; " << known_mutations_hint()
                      << "\n";
            return kExitUsage;
        }
    }

    std::vector<srr::IdentityId> ids;
    if (all) {
        ids = srr::all_identity_ids();
    } else {
        const auto id = srr::parse_identity_id(identity_s);
        if (!id) {
            std::cerr << "unknown identity '" << identity_s << "'; " << known_ids_hint() << "\n";
            return kExitUsage;
        }
        ids.push_back(*id);
    }

    std::vector<srr::VerificationReport> reports;
    for (srr::IdentityId id : ids) {
        reports.push_back(srr::verify_counts(id, max_n, sys));
        reports.push_back(srr::verify_series(id, series_max, max_n, sys));
        for (srr::MapId map : srr::descriptor(id).maps)
            reports.push_back(srr::verify_bijection(map, bij_max, sys));
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (format == "json") {
        std::cout << srr::reports_json(reports) << "\n";
    } else {
        for (const auto& r : reports) print_report_text(r);
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_catalog()
{
    for (const auto& desc : srr::catalog()) {
        std::cout << to_string(desc.id) << ": " << desc.statement << "\n";
        std::cout << "    " << desc.source << "\n";
        std::cout << "    ordinary class " << to_string(desc.ordinary);
        if (!desc.signed_classes.empty()) {
            std::cout << "; signed";
            for (auto c : desc.signed_classes) std::cout << " " << to_string(c);
        }
        if (desc.index_offset != 0) std::cout << "; signed index offset " << desc.index_offset;
        std::cout << "\n";
        if (!desc.maps.empty()) {
            std::cout << "    bijections:";
            for (auto m : desc.maps) std::cout << " " << to_string(m);
            std::cout << "\n";
        }
        if (desc.product_side_stated) {
            const auto form = srr::product_form(desc.id);
            std::cout << "    product side: parts in residues {";
            for (std::size_t i = 0; i < form.residues.size(); ++i)
                std::cout << (i ? "," : "") << form.residues[i];
            std::cout << "} mod " << form.modulus << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"signed-partition verification of Rogers-Ramanujan type identities"};
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "coefficient/count tables for an identity");
    std::string co_identity, co_side = "sum", co_format = "csv", co_class;
    int co_max = 200;
    coeffs->add_option("--identity", co_identity, "identity id")->required();
    coeffs->add_option("--side", co_side, "sum | product | ordinary-count | signed-count")
        ->check(CLI::IsMember({"sum", "product", "ordinary-count", "signed-count"}));
    coeffs->add_option("--max", co_max, "largest n");
    coeffs->add_option("--format", co_format)->check(CLI::IsMember({"csv", "json"}));
    coeffs->add_option("--class", co_class, "signed class override for signed-count");

    auto* enumerate = app.add_subcommand("enumerate", "list the weight-n members of a class");
    std::string en_class, en_format = "lines";
    int en_n = 0;
    enumerate->add_option("--class", en_class, "class id")->required();
    enumerate->add_option("--n", en_n, "weight")->required();
    enumerate->add_option("--format", en_format)->check(CLI::IsMember({"lines", "json"}));

    auto* biject = app.add_subcommand("biject", "apply a bijection (or its inverse)");
    std::string bi_map, bi_input;
    bool bi_inverse = false;
    biject->add_option("--map", bi_map, "map id")->required();
    biject->add_flag("--inverse", bi_inverse, "apply the inverse map");
    biject->add_option("--input", bi_input, "comma-separated parts")->required();

    auto* verify = app.add_subcommand("verify", "run the cross-verification suite");
    std::string ve_identity, ve_format = "text", ve_mutate;
    bool ve_all = false;
    int ve_max_n = 40, ve_series_max = 60, ve_bij_max = 35;
    verify->add_option("--identity", ve_identity, "identity id");
    verify->add_flag("--all", ve_all, "verify the whole catalog");
    verify->add_option("--max-n", ve_max_n, "count-equality bound");
    verify->add_option("--series-max", ve_series_max, "series truncation order");
    verify->add_option("--bijection-max", ve_bij_max, "bijection sweep bound");
    verify->add_option("--format", ve_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--mutate", ve_mutate,
                       "corrupt one class clause first (falsifiability self-test)");

    auto* catalog_cmd = app.add_subcommand("catalog", "print the identity catalog");
    (void)catalog_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed())
            return run_coeffs(co_identity, co_side, co_max, co_format, co_class);
        if (enumerate->parsed()) return run_enumerate(en_class, en_n, en_format);
        if (biject->parsed()) return run_biject(bi_map, bi_inverse, bi_input);
        if (verify->parsed())
            return run_verify(ve_identity, ve_all, ve_max_n, ve_series_max, ve_bij_max, ve_format,
                              ve_mutate);
        if (catalog_cmd->parsed()) return run_catalog();
    } catch (const srr::series_not_stated& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const srr::product_not_stated& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
