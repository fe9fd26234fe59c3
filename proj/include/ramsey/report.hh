#ifndef RAMSEY_REPORT_HH
#define RAMSEY_REPORT_HH

#include <ramsey/catalog.hh>
#include <ramsey/verify.hh>

#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    auto tool_version() -> std::string;

    /// Line-delimited JSON records, keys sorted, no trailing newline. Timings
    /// appear only when given, so default reports are byte-reproducible.
    auto header_record(const std::string & command) -> std::string;
    auto certificate_record(const BoundCertificate & c, std::optional<double> elapsed_ms = std::nullopt) -> std::string;
    auto sweep_record(const SweepReport & r, std::optional<double> elapsed_ms = std::nullopt) -> std::string;
    auto claim_record(const RamseyClaim & claim) -> std::string;
    auto search_record(const TreeSpec & tree, int wheel_m, int order, long budget, std::uint64_t seed,
            const SearchOutcome & outcome) -> std::string;

    /// Human-readable tables.
    auto certificate_table(const std::vector<BoundCertificate> & certificates) -> std::string;
    auto sweep_table(const std::vector<SweepReport> & reports) -> std::string;

    auto params_string(const ClaimParams & p) -> std::string;
}

#endif
