#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/matroid.hpp"

namespace matroid_xf {

/// Problem with a matroid spec file. kind() separates malformed JSON,
/// schema violations and loops.
class SpecError : public InvalidInput {
  public:
    enum class Kind { parse, validation, loop };
    SpecError(Kind kind, const std::string& what);
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Builds a matroid from spec-file JSON text:
///   {"type":"uniform","r":2,"n":4}
///   {"type":"graphic","vertices":4,"edges":[[0,1],...]}
///   {"type":"binary","matrix":[[1,0,...],...]}
///   {"type":"bases","n":4,"bases":[[0,1],...]}
///   {"type":"dual","of":<spec>}
///   {"type":"direct_sum","parts":[<spec>,...]}
Matroid parse_matroid(const std::string& json_text);
/// Reads and parses a spec file. Throws SpecError.
Matroid load_matroid(const std::string& path);

/// Runs one command line (argv[0] is the program name). Returns the exit
/// code: 0 success, 1 verification failure, 2 usage or input error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace matroid_xf
