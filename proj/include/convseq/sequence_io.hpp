#ifndef CONVSEQ_SEQUENCE_IO_HPP
#define CONVSEQ_SEQUENCE_IO_HPP

#include <string>

#include "convseq/recurrence.hpp"

namespace convseq {

// Builds a sequence from JSON of the form
//   { "name": "my_sequence", "coefficients": ["1", "-1/2", "1/12"] }
// where coefficients[i] = a_i as a rational literal and coefficients[0]
// must be "1". Requesting an index beyond the list is a DomainError (the
// list is the whole sequence; it is not zero-padded). Malformed JSON or
// rational literals raise ParseError; `origin` names the source in
// messages.
CoefficientSequence coefficient_sequence_from_json(const std::string& text,
                                                   const std::string& origin = "<string>");

// Reads the file and delegates to coefficient_sequence_from_json.
// Error(file unreadable), ParseError, or DomainError as appropriate.
CoefficientSequence load_coefficient_sequence(const std::string& path);

} // namespace convseq

#endif
