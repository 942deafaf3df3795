#ifndef RINGCOVER_IO_HPP
#define RINGCOVER_IO_HPP

#include <optional>
#include <string>

#include "ringcover/census.hpp"
#include "ringcover/covering.hpp"
#include "ringcover/iso.hpp"
#include "ringcover/presentation.hpp"

namespace ringcover {

enum class Format { Json, Csv, Table };

Format format_from_string(const std::string& s);  // ParseError on anything else

/// Parse {"orders": [...], "products": [[coeff-vector,...],...]}. Malformed
/// documents raise ParseError naming the offending field; the group limit
/// raises TooLargeError.
RingPresentation parse_presentation(const std::string& json_text,
                                    std::size_t max_order = kDefaultMaxOrder);

std::string render_presentation(const RingPresentation& p, Format f);

/// Profile report; infinite values appear as "inf". Witness covers are lists
/// of element-index sets, included when witnesses is set (JSON and table
/// formats; CSV always stays a flat value row).
std::string render_profile(const FiniteRing& r, const ProfileResult& res, Format f,
                           bool witnesses);

/// Read the five values back out of a JSON profile report.
CoveringProfile parse_profile(const std::string& json_text);

std::string render_census(const CensusResult& res, Format f);

std::string render_iso(const std::optional<IsoWitness>& w, Format f);

}  // namespace ringcover

#endif
