// Command-line front end: count, enumerate, classify, factorize, verify-rank
// and table.

#ifndef PATHMONOID_TOOLS_CLI_HPP_
#define PATHMONOID_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pathmonoid::cli {

inline constexpr int kExitOk     = 0;
inline constexpr int kExitFailed = 1;  // non-member, unverified
inline constexpr int kExitUsage  = 2;  // bad arguments or unparsable input

inline constexpr std::size_t kDefaultCountCap   = 64;
inline constexpr std::size_t kDefaultClosureCap = 8;

enum class Format { plain, jsonl, csv };

struct Field {
  enum class Kind { string, number, boolean };

  std::string name;
  std::string text;
  Kind        kind = Kind::string;
};

using Record = std::vector<Field>;

// Writes records in one of the three formats.  In plain format, tabular
// output prints the values of each record on one space-separated line, and
// keyed output prints one name=value line per field with a blank line
// between records.  csv prints a header row before the first record.
class RecordWriter {
 public:
  enum class PlainStyle { columns, keyed };

  RecordWriter(std::ostream& out, Format format, PlainStyle style);

  void write(Record const& record);

 private:
  std::ostream& _out;
  Format        _format;
  PlainStyle    _style;
  std::size_t   _records;
};

// args excludes the program name.  Returns the process exit code.
int run(std::vector<std::string> const& args,
        std::istream&                   in,
        std::ostream&                   out,
        std::ostream&                   err);

}  // namespace pathmonoid::cli

#endif  // PATHMONOID_TOOLS_CLI_HPP_
