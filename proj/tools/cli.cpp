#include "cli.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pathmonoid/endomorphisms.hpp"
#include "pathmonoid/generators.hpp"
#include "pathmonoid/transformation.hpp"

namespace pathmonoid::cli {

namespace {

  Field str(std::string name, std::string value) {
    return {std::move(name), std::move(value), Field::Kind::string};
  }

  template <typename T>
  Field num(std::string name, T const& value) {
    std::ostringstream os;
    os << value;
    return {std::move(name), os.str(), Field::Kind::number};
  }

  Field flag(std::string name, bool value) {
    return {std::move(name), value ? "true" : "false", Field::Kind::boolean};
  }

  std::string csv_escape(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      return s;
    }
    std::string quoted = "\"";
    for (auto const c : s) {
      if (c == '"') {
        quoted += '"';
      }
      quoted += c;
    }
    return quoted + '"';
  }

  std::string composition_text(std::vector<std::size_t> const& parts) {
    std::string result = "[";
    for (std::size_t t = 0; t < parts.size(); ++t) {
      result += (t == 0 ? "" : ",") + std::to_string(parts[t]);
    }
    return result + "]";
  }

  struct Options {
    Format      format      = Format::plain;
    std::size_t max_n       = 0;  // 0 means the per-command default
    bool        allow_large = false;
  };

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  void check_cap(Options const& opt,
                 std::size_t    n,
                 std::size_t    default_cap,
                 char const*    what) {
    auto const cap = opt.max_n == 0 ? default_cap : opt.max_n;
    if (!opt.allow_large && n > cap) {
      throw UsageError(std::string(what) + ": n = " + std::to_string(n)
                       + " exceeds the cap " + std::to_string(cap)
                       + " (raise it with --max-n or pass --allow-large)");
    }
  }

  void check_positive(std::size_t n, char const* what) {
    if (n < 1) {
      throw UsageError(std::string(what) + ": n must be at least 1");
    }
  }

  std::vector<std::string> inputs_or_stdin(std::vector<std::string> inputs,
                                           std::istream&            in) {
    if (!inputs.empty()) {
      return inputs;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        inputs.push_back(line);
      }
    }
    return inputs;
  }

  int cmd_count(Options const& opt, std::size_t n, bool closed_form,
                std::ostream& out) {
    check_positive(n, "count");
    check_cap(opt, n, kDefaultCountCap, "count");
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::keyed);
    auto const   size = count_wend(n);
    Record       record{
        num("n", n), num("wend", size), num("idempotents", count_idempotents(n))};
    bool agrees = true;
    if (closed_form) {
      auto const other = count_wend_closed_form(n);
      agrees           = other == size;
      record.push_back(num("closed_form", other));
      record.push_back(flag("closed_form_agrees", agrees));
    }
    writer.write(record);
    return agrees ? kExitOk : kExitFailed;
  }

  int cmd_enumerate(Options const& opt, std::size_t n, std::ostream& out) {
    check_positive(n, "enumerate");
    check_cap(opt, n, kDefaultClosureCap, "enumerate");
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::columns);
    WEndStream   stream(n);
    while (auto f = stream.next()) {
      auto const code = encode(*f);
      writer.write({str("image", to_string(*f)),
                    num("offset", code.offset),
                    str("composition", composition_text(code.composition)),
                    num("rank", code.composition.size()),
                    flag("idempotent", is_idempotent(*f)),
                    flag("regular", is_regular(*f))});
    }
    return kExitOk;
  }

  int cmd_classify(Options const&                  opt,
                   std::vector<std::string> const& inputs,
                   std::ostream&                   out,
                   std::ostream&                   err) {
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::keyed);
    int          code = kExitOk;
    for (auto const& text : inputs) {
      std::optional<Transformation> f;
      try {
        f = parse_transformation(text);
      } catch (ParseError const& e) {
        err << "classify: cannot parse \"" << text << "\": " << e.what()
            << '\n';
        code = kExitUsage;
        continue;
      }
      auto const r = classify(*f);
      writer.write({str("input", to_string(*f)),
                    num("n", f->degree()),
                    flag("wend", r.is_wend),
                    flag("end", r.is_end),
                    flag("send", r.is_send),
                    flag("swend", r.is_swend),
                    flag("aut", r.is_aut),
                    flag("idempotent", r.is_idempotent),
                    flag("regular", r.is_regular),
                    num("rank", r.rank),
                    num("image_min", r.image_min),
                    num("image_max", r.image_max)});
    }
    return code;
  }

  int cmd_factorize(Options const&                  opt,
                    std::vector<std::string> const& inputs,
                    std::ostream&                   out,
                    std::ostream&                   err) {
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::keyed);
    int          code = kExitOk;
    auto const   fail = [&code](int c) { code = std::max(code, c); };
    for (auto const& text : inputs) {
      std::optional<Transformation> f;
      try {
        f = parse_transformation(text);
      } catch (ParseError const& e) {
        err << "factorize: cannot parse \"" << text << "\": " << e.what()
            << '\n';
        fail(kExitUsage);
        continue;
      }
      if (!is_weak_endomorphism(*f)) {
        err << "factorize: " << to_string(*f)
            << " is not a weak endomorphism of the directed path\n";
        fail(kExitFailed);
        continue;
      }
      if (f->degree() < 3) {
        err << "factorize: the canonical generators exist only for n >= 3; "
               "for n = 1 the monoid is trivial (rank 0), and for n = 2 it "
               "is generated only by its two non-identity elements "
               "[1,1] and [2,2] (rank 2)\n";
        fail(kExitFailed);
        continue;
      }
      auto const word      = factorize(*f);
      auto const evaluated = evaluate(word);
      bool const verified  = evaluated == *f;
      writer.write({str("input", to_string(*f)),
                    str("word", to_string(word)),
                    num("length", word.symbols.size()),
                    str("evaluated", to_string(evaluated)),
                    flag("verified", verified)});
      if (!verified) {
        fail(kExitFailed);
      }
    }
    return code;
  }

  int cmd_verify_rank(Options const& opt, std::size_t n, std::ostream& out) {
    check_positive(n, "verify-rank");
    check_cap(opt, n, kDefaultClosureCap, "verify-rank");
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::keyed);
    if (n < 3) {
      // no canonical generators; find the rank by exhaustive subset search
      auto const rank     = exhaustive_rank(n);
      auto const expected = n == 1 ? std::size_t{0} : std::size_t{2};
      writer.write({num("n", n),
                    str("method", "exhaustive"),
                    num("rank", rank),
                    num("expected_rank", expected),
                    flag("verdict", rank == expected)});
      return rank == expected ? kExitOk : kExitFailed;
    }
    auto const cert = kernel_lower_bound(n);
    writer.write(
        {num("n", n),
         num("generating_set_size", cert.generating_set_size),
         num("distinct_rank_n_minus_1_kernels",
             cert.distinct_rank_n_minus_1_kernels),
         num("closure_size", cert.closure_size),
         num("expected_size", cert.expected_size),
         flag("identity_unique_of_rank_n", cert.identity_unique_of_rank_n),
         flag("verdict", cert.verdict)});
    return cert.verdict ? kExitOk : kExitFailed;
  }

  int cmd_table(Options const& opt, std::size_t n_max, std::ostream& out) {
    check_positive(n_max, "table");
    check_cap(opt, n_max, kDefaultCountCap, "table");
    RecordWriter writer(out, opt.format, RecordWriter::PlainStyle::columns);
    for (std::size_t n = 1; n <= n_max; ++n) {
      writer.write({num("n", n),
                    num("wend", count_wend(n)),
                    num("idempotents", count_idempotents(n))});
    }
    return kExitOk;
  }

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, Format format, PlainStyle style)
    : _out(out), _format(format), _style(style), _records(0) {}

void RecordWriter::write(Record const& record) {
  switch (_format) {
    case Format::plain:
      if (_style == PlainStyle::columns) {
        for (std::size_t t = 0; t < record.size(); ++t) {
          _out << (t == 0 ? "" : " ") << record[t].text;
        }
        _out << '\n';
      } else {
        if (_records > 0) {
          _out << '\n';
        }
        for (auto const& field : record) {
          _out << field.name << '=' << field.text << '\n';
        }
      }
      break;
    case Format::csv:
      if (_records == 0) {
        for (std::size_t t = 0; t < record.size(); ++t) {
          _out << (t == 0 ? "" : ",") << csv_escape(record[t].name);
        }
        _out << '\n';
      }
      for (std::size_t t = 0; t < record.size(); ++t) {
        _out << (t == 0 ? "" : ",") << csv_escape(record[t].text);
      }
      _out << '\n';
      break;
    case Format::jsonl:
      // numbers are written verbatim so that big counts keep every digit
      _out << '{';
      for (std::size_t t = 0; t < record.size(); ++t) {
        _out << (t == 0 ? "" : ",") << nlohmann::json(record[t].name).dump()
             << ':';
        if (record[t].kind == Field::Kind::string) {
          _out << nlohmann::json(record[t].text).dump();
        } else {
          _out << record[t].text;
        }
      }
      _out << "}\n";
      break;
  }
  ++_records;
}

int run(std::vector<std::string> const& args,
        std::istream&                   in,
        std::ostream&                   out,
        std::ostream&                   err) {
  CLI::App app{"Endomorphism monoids of the finite directed path"};
  app.fallthrough();
  app.require_subcommand(1);

  Options                             opt;
  std::map<std::string, Format> const formats{
      {"plain", Format::plain}, {"jsonl", Format::jsonl}, {"csv", Format::csv}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--max-n", opt.max_n,
                 "Cap on n (defaults: 64 for count/table, 8 for "
                 "enumerate/verify-rank)");
  app.add_flag("--allow-large", opt.allow_large, "Ignore the caps on n");

  std::size_t n           = 0;
  bool        closed_form = false;
  auto*       count       = app.add_subcommand("count", "Size and idempotents");
  count->add_option("n", n)->required();
  count->add_flag("--closed-form", closed_form,
                  "Cross-check against (n + 1) 2^(n - 2)");

  auto* enumerate = app.add_subcommand("enumerate", "List every element");
  enumerate->add_option("n", n)->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify transformations given as arguments or on stdin");
  // transformations are taken verbatim from the leftover arguments, since
  // CLI11 would split a bracketed list such as [1,2,2] into separate values
  app.allow_extras();

  auto* factorize_cmd = app.add_subcommand(
      "factorize", "Factorize over the canonical generators");

  auto* verify = app.add_subcommand("verify-rank", "Certify the rank");
  verify->add_option("n", n)->required();

  auto* table = app.add_subcommand("table", "Size and idempotents for 1..n");
  table->add_option("n_max", n)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto const leftovers = app.remaining();
  try {
    if (!leftovers.empty() && !*classify_cmd && !*factorize_cmd) {
      throw UsageError("unexpected argument " + leftovers.front());
    }
    if (*count) {
      return cmd_count(opt, n, closed_form, out);
    }
    if (*enumerate) {
      return cmd_enumerate(opt, n, out);
    }
    if (*classify_cmd) {
      return cmd_classify(
          opt, inputs_or_stdin(leftovers, in), out, err);
    }
    if (*factorize_cmd) {
      return cmd_factorize(
          opt, inputs_or_stdin(leftovers, in), out, err);
    }
    if (*verify) {
      return cmd_verify_rank(opt, n, out);
    }
    if (*table) {
      return cmd_table(opt, n, out);
    }
  } catch (UsageError const& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pathmonoid::cli
