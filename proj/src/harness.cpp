#include "srr/harness.hpp"

#include <json.hpp>

#include <set>

#include "srr/bijections.hpp"
#include "srr/partition.hpp"
#include "srr/series.hpp"

namespace srr {

namespace {

constexpr std::size_t kMaxFailuresPerReport = 8;

void record(VerificationReport& report, CheckFailure failure)
{
    report.pass = false;
    if (report.failures.size() < kMaxFailuresPerReport)
        report.failures.push_back(std::move(failure));
    else if (report.note.find("further failures") == std::string::npos)
        report.note += (report.note.empty() ? "" : "; ") + std::string("further failures omitted");
}

// Up to `limit` members of the class at weight n, as a "{a, b, ...}"
// sample string for failure witnesses.
std::string sample_members(const ClassSystem& sys, ClassId id, int n, std::size_t limit)
{
    std::vector<std::string> sample;
    std::size_t total = 0;
    if (sys.info(id).side == Side::Ordinary) {
        sys.for_each(id, n, std::function<void(const Partition&)>([&](const Partition& p) {
                         if (total++ < limit) sample.push_back(format(p));
                     }));
    } else {
        sys.for_each(id, n,
                     std::function<void(const SignedPartition&)>([&](const SignedPartition& s) {
                         if (total++ < limit) sample.push_back(format(s));
                     }));
    }
    std::string out = "{";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (i) out += "; ";
        out += sample[i];
    }
    if (total > sample.size()) out += "; ...";
    out += "}";
    return out;
}

std::string count_witness(const ClassSystem& sys, ClassId a, ClassId b, int na, int nb)
{
    return std::string(to_string(a)) + "[" + std::to_string(na) + "] = " +
           sample_members(sys, a, na, 3) + " vs " + std::string(to_string(b)) + "[" +
           std::to_string(nb) + "] = " + sample_members(sys, b, nb, 3);
}

} // namespace

VerificationReport verify_counts(IdentityId id, int n_max, const ClassSystem& sys)
{
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const IdentityDescriptor& desc = descriptor(id);
    VerificationReport report{std::string(to_string(id)), "counts", 0, n_max, true, "", {}};

    for (int n = 0; n <= n_max; ++n) {
        if (desc.difference_of) {
            const auto [first, second] = *desc.difference_of;
            const long long diff = static_cast<long long>(sys.count(first, n)) -
                                   static_cast<long long>(sys.count(second, n));
            const long long direct = static_cast<long long>(sys.count(desc.ordinary, n));
            if (diff != direct) {
                record(report,
                       {n, "count(" + std::string(to_string(first)) + ")-count(" +
                            std::string(to_string(second)) + ")",
                        "enumerate:" + std::string(to_string(desc.ordinary)),
                        std::to_string(diff), std::to_string(direct),
                        count_witness(sys, first, desc.ordinary, n, n)});
            }
            continue;
        }
        const std::uint64_t ordinary = sys.count(desc.ordinary, n);
        for (ClassId signed_id : desc.signed_classes) {
            const int m = n + desc.index_offset;
            if (m < 0) continue;
            const std::uint64_t signed_count = sys.count(signed_id, m);
            if (ordinary != signed_count) {
                record(report, {n, "enumerate:" + std::string(to_string(desc.ordinary)),
                                "enumerate:" + std::string(to_string(signed_id)),
                                std::to_string(ordinary), std::to_string(signed_count),
                                count_witness(sys, desc.ordinary, signed_id, n, m)});
            }
        }
    }
    return report;
}

VerificationReport verify_series(IdentityId id, int n_order, int count_max,
                                 const ClassSystem& sys)
{
    if (n_order < 0) throw std::invalid_argument("truncation order must be >= 0");
    if (count_max < 0) count_max = n_order;
    count_max = std::min(count_max, n_order);

    const IdentityDescriptor& desc = descriptor(id);
    VerificationReport report{std::string(to_string(id)), "series", 0, n_order, true, "", {}};

    if (!desc.sum_side_stated) {
        report.note = "no series form stated for this identity; verified by counts and bijection";
        return report;
    }

    const TruncatedSeries sum = sum_side(id, n_order);

    for (int n = 0; n <= n_order; ++n) {
        if (sum[n] < 0)
            record(report, {n, "series:sum", "nonnegativity", sum[n].str(), ">= 0",
                            "sum-side coefficient is negative"});
    }

    for (int n = 0; n <= count_max; ++n) {
        const BigInt ordinary(sys.count(desc.ordinary, n));
        if (sum[n] != ordinary) {
            record(report, {n, "series:sum", "enumerate:" + std::string(to_string(desc.ordinary)),
                            sum[n].str(), ordinary.str(),
                            std::string(to_string(desc.ordinary)) + "[" + std::to_string(n) +
                                "] = " + sample_members(sys, desc.ordinary, n, 3)});
        }
        for (ClassId signed_id : desc.signed_classes) {
            const int m = n + desc.index_offset;
            if (m < 0) continue;
            const BigInt signed_count(sys.count(signed_id, m));
            if (sum[n] != signed_count) {
                record(report, {n, "series:sum", "enumerate:" + std::string(to_string(signed_id)),
                                sum[n].str(), signed_count.str(),
                                std::string(to_string(signed_id)) + "[" + std::to_string(m) +
                                    "] = " + sample_members(sys, signed_id, m, 3)});
            }
        }
    }

    if (desc.difference_of) {
        // Independent route: difference of the two base sum sides.
        TruncatedSeries diff = sum_side(IdentityId::GG1_ANDREWS, n_order);
        const TruncatedSeries subtrahend = sum_side(IdentityId::GG2_3WAY, n_order);
        for (int n = 0; n <= n_order; ++n) {
            diff.coeff[static_cast<std::size_t>(n)] -= subtrahend[n];
            if (diff[n] < 0)
                record(report, {n, "series:GG1-GG2", "nonnegativity", diff[n].str(), ">= 0",
                                "difference coefficient is negative"});
            if (diff[n] != sum[n])
                record(report, {n, "series:GG1-GG2", "series:sum", diff[n].str(), sum[n].str(),
                                "difference series disagrees with its own sum form"});
        }
    }

    if (desc.product_side_stated) {
        const TruncatedSeries product = product_side(id, n_order);
        for (int n = 0; n <= n_order; ++n) {
            if (sum[n] != product[n])
                record(report, {n, "series:sum", "series:product", sum[n].str(), product[n].str(),
                                "sum and product sides disagree"});
        }
    }
    return report;
}

VerificationReport verify_bijection(MapId id, int n_max, const ClassSystem& sys)
{
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const MapInfo& info = map_info(id);
    VerificationReport report{std::string(to_string(id)), "bijection", 0, n_max, true, "", {}};

    for (int n = 0; n <= n_max; ++n) {
        const auto sources = sys.enumerate_ordinary(info.source, n);
        std::set<SignedPartition> images;

        for (const Partition& source : sources) {
            SignedPartition image;
            try {
                image = apply_forward(id, source, sys);
            } catch (const map_error& e) {
                record(report, {n, "forward:" + std::string(to_string(id)),
                                "target:" + std::string(to_string(info.target)), format(source),
                                "(rejected)", e.what()});
                continue;
            }
            images.insert(image);
            try {
                const Partition back = apply_inverse(id, image, sys);
                if (back != source)
                    record(report, {n, "inverse(forward(x))", "x", format(back), format(source),
                                    "image " + format(image)});
            } catch (const map_error& e) {
                record(report, {n, "inverse:" + std::string(to_string(id)),
                                "source:" + std::string(to_string(info.source)), format(image),
                                "(rejected)", e.what()});
            }
        }

        if (images.size() != sources.size())
            record(report, {n, "forward injectivity", "source count",
                            std::to_string(images.size()), std::to_string(sources.size()),
                            "distinct images vs source members at weight " + std::to_string(n)});

        const auto targets = sys.enumerate_signed(info.target, n);
        if (images.size() != targets.size())
            record(report, {n, "image cardinality", "enumerate:" + std::string(to_string(info.target)),
                            std::to_string(images.size()), std::to_string(targets.size()),
                            "image set does not fill the target class at weight " +
                                std::to_string(n)});

        for (const SignedPartition& target : targets) {
            try {
                const Partition pre = apply_inverse(id, target, sys);
                const SignedPartition forward = apply_forward(id, pre, sys);
                if (forward != target)
                    record(report, {n, "forward(inverse(y))", "y", format(forward), format(target),
                                    "pre-image " + format(pre)});
            } catch (const map_error& e) {
                record(report, {n, "inverse:" + std::string(to_string(id)),
                                "target:" + std::string(to_string(info.target)), format(target),
                                "(rejected)", e.what()});
            }
        }
    }
    return report;
}

std::vector<VerificationReport> run_full_suite(int counts_max, int series_order,
                                               int series_count_max, int bijection_max,
                                               const ClassSystem& sys)
{
    std::vector<VerificationReport> reports;
    for (const IdentityDescriptor& desc : catalog()) {
        reports.push_back(verify_counts(desc.id, counts_max, sys));
        reports.push_back(verify_series(desc.id, series_order, series_count_max, sys));
        for (MapId map : desc.maps) reports.push_back(verify_bijection(map, bijection_max, sys));
    }
    return reports;
}

namespace {

nlohmann::json to_json_value(const VerificationReport& report)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const CheckFailure& f : report.failures) {
        failures.push_back({{"n", f.n},
                            {"oracle_a", f.oracle_a},
                            {"oracle_b", f.oracle_b},
                            {"value_a", f.value_a},
                            {"value_b", f.value_b},
                            {"witness", f.witness}});
    }
    return {{"identity", report.subject},
            {"check", report.check},
            {"range", {{"lo", report.range_lo}, {"hi", report.range_hi}}},
            {"status", report.status()},
            {"note", report.note},
            {"failures", failures}};
}

} // namespace

std::string report_json(const VerificationReport& report)
{
    return to_json_value(report).dump(2);
}

std::string reports_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json_value(r));
    return arr.dump(2);
}

} // namespace srr
