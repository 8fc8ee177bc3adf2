#include "lrbqv/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrbqv/arrangements.hpp"
#include "lrbqv/construct.hpp"
#include "lrbqv/green.hpp"
#include "lrbqv/hom_oracle.hpp"
#include "lrbqv/isomorphism.hpp"
#include "lrbqv/membership.hpp"
#include "lrbqv/quasi_identity.hpp"
#include "lrbqv/table_io.hpp"
#include "lrbqv/witness_family.hpp"

namespace lrbqv::cli {

  namespace {
    std::size_t parse_size(std::string const& text, std::string const& spec) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw PreconditionError("bad number in '" + spec + "'");
      }
      return value;
    }

    std::string read_text(std::string const& path, std::istream& in) {
      std::ostringstream buffer;
      if (path.empty() || path == "-") {
        buffer << in.rdbuf();
      } else {
        std::ifstream file(path);
        if (!file) {
          throw PreconditionError("cannot open '" + path + "'");
        }
        buffer << file.rdbuf();
      }
      return buffer.str();
    }

    FiniteSemigroup load(std::string const& path, std::istream& in) {
      return read_semigroup(read_text(path, in));
    }

    std::string lrb_failure(FiniteSemigroup const& S) {
      auto        v   = find_lrb_violation(S);
      std::string out = v->identity + " fails at x=" + S.name(v->witnesses[0]);
      if (v->witnesses.size() > 1) {
        out += " y=" + S.name(v->witnesses[1]);
      }
      return out;
    }

    int do_validate(std::string const& path, std::istream& in, std::ostream& out) {
      auto result = validate(parse_table(read_text(path, in)));
      if (!result.ok()) {
        out << "INVALID\n";
        for (auto const& e : result.errors) {
          out << "  " << e.message << '\n';
        }
        return negative;
      }
      auto const& S = *result.semigroup;
      out << "VALID order=" << S.order()
          << " identity=" << (S.identity() ? S.name(*S.identity()) : "none")
          << " lrb=" << (S.is_lrb() ? "yes" : "no") << '\n';
      return ok;
    }

    int do_analyze(std::string const& path, bool dot, std::istream& in, std::ostream& out) {
      auto const S = load(path, in);
      out << "order: " << S.order() << '\n';
      out << "identity: " << (S.identity() ? S.name(*S.identity()) : "none") << '\n';
      if (S.is_lrb()) {
        out << "lrb: yes\n";
      } else {
        out << "lrb: no (" << lrb_failure(S) << ")\n";
      }
      out << "L-classes:";
      auto const classes = green_L_classes(S);
      for (auto const& block : classes.blocks()) {
        out << ' ' << format_element_set(S, block);
      }
      out << '\n';
      if (S.is_lrb()) {
        out << "components: " << component_partition(S).size() << '\n';
        if (dot) {
          out << hasse_dot(S);
        }
      }
      return ok;
    }

    int do_check(std::string const& which,
                 std::string const& path,
                 std::istream&      in,
                 std::ostream&      out) {
      auto const S = load(path, in);
      auto const c = which == "cc" ? Condition::cc : Condition::cc_prime;
      auto const r = check_condition(S, c);
      out << format_condition_result(S, r) << '\n';
      return r.satisfied() ? ok : negative;
    }

    int do_member(std::string const& target,
                  std::string const& path,
                  bool               oracle,
                  std::istream&      in,
                  std::ostream&      out) {
      auto const        S     = load(path, in);
      std::string const label = "qv(" + target + ")";
      bool const        real  = target == "L";
      if (!S.is_lrb()) {
        MembershipVerdict v{false, {}, label};
        out << v.statement() << '\n'
            << "not a left regular band: " << lrb_failure(S) << '\n';
        return negative;
      }
      if (oracle) {
        auto const generator = generate(target);
        auto const r         = separating_family(S, generator);
        MembershipVerdict v{r.separable(), {}, label};
        out << v.statement() << '\n' << format_certificate(S, generator, r);
        return r.separable() ? ok : negative;
      }
      MembershipVerdict v = real ? in_qv_L(S) : in_qv_ZL(S);
      v.quasivariety      = label;
      out << v.statement() << '\n'
          << format_condition_result(S, v.evidence) << '\n';
      return v.member ? ok : negative;
    }

    int do_qi_gen(std::string const& spec, std::ostream& out) {
      auto const colon = spec.find(':');
      if (colon == std::string::npos) {
        throw PreconditionError("expected Q:<n> or Qp:<n>, got '" + spec + "'");
      }
      auto const family = spec.substr(0, colon);
      auto const n      = parse_size(spec.substr(colon + 1), spec);
      if (family == "Q") {
        out << format_qi(gen_Q(n)) << '\n';
      } else if (family == "Qp") {
        out << format_qi(gen_Q_prime(n)) << '\n';
      } else {
        throw PreconditionError("unknown quasi-identity family '" + family + "'");
      }
      return ok;
    }

    int do_qi_eval(std::string const& qi_path,
                   std::string const& table_path,
                   std::istream&      in,
                   std::ostream&      out) {
      if (qi_path == "-" && (table_path.empty() || table_path == "-")) {
        throw PreconditionError("qi eval: only one input can come from stdin");
      }
      auto const q = parse_qi(read_text(qi_path, in));
      auto const S = load(table_path, in);
      auto const r = evaluate(S, q);
      out << format_qi_result(S, q, r) << '\n';
      return r.satisfied ? ok : negative;
    }

    int do_iso(std::string const& p1,
               std::string const& p2,
               std::istream&      in,
               std::ostream&      out) {
      auto const S = load(p1, in);
      auto const T = load(p2, in);
      auto const f = is_isomorphic(S, T);
      if (!f) {
        out << "NOT ISOMORPHIC\n";
        return negative;
      }
      out << "ISOMORPHIC\n";
      for (element_type x = 0; x < S.order(); ++x) {
        out << (x == 0 ? "" : " ") << S.name(x) << "->" << T.name((*f)[x]);
      }
      out << '\n';
      return ok;
    }
  }  // namespace

  FiniteSemigroup generate(std::string const& spec) {
    if (spec == "L") {
      return gen_L();
    }
    if (spec == "ZL") {
      return gen_ZL();
    }
    if (spec == "Z") {
      return gen_Z();
    }
    auto const colon = spec.find(':');
    if (colon == std::string::npos) {
      throw PreconditionError("unknown generator '" + spec + "'");
    }
    auto const family = spec.substr(0, colon);
    auto const n      = parse_size(spec.substr(colon + 1), spec);
    if (family == "coord") {
      return coordinate_arrangement_monoid(n);
    }
    if (family == "zcoord") {
      return complex_coordinate_monoid(n);
    }
    if (family == "F") {
      return line_arrangement_faces(n).semigroup;
    }
    if (family == "Fp") {
      return f_n_prime(n);
    }
    if (family == "B") {
      return b_n(n);
    }
    if (family == "free") {
      return free_lrb(n);
    }
    throw PreconditionError("unknown generator '" + spec + "'");
  }

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Decide embeddability of finite semigroups in hyperplane face monoids",
                 "lrbqv"};
    app.require_subcommand(1);

    std::string spec, table, table2, which, target = "L", qi_file;
    bool        dot = false, oracle = false;
    std::size_t n   = 0;

    auto* gen = app.add_subcommand("gen", "Print the table of a generated semigroup");
    gen->add_option("spec", spec, "L, ZL, Z, coord:<n>, zcoord:<n>, F:<n>, Fp:<n>, B:<n>, free:<k>")
        ->required();

    auto* val = app.add_subcommand("validate", "Check a table for closure and associativity");
    val->add_option("table", table, "Table file (default: stdin)");

    auto* ana = app.add_subcommand("analyze", "LRB check, L-classes, component count");
    ana->add_option("table", table, "Table file (default: stdin)");
    ana->add_flag("--dot", dot, "Append the R-order Hasse diagram in DOT");

    auto* chk = app.add_subcommand("check", "Check condition (CC) or (CC')");
    chk->add_option("condition", which, "cc or ccp")
        ->required()
        ->check(CLI::IsMember({"cc", "ccp"}));
    chk->add_option("table", table, "Table file (default: stdin)");

    auto* mem = app.add_subcommand("member", "Decide membership in qv(L), qv(ZL) or qv(Z)");
    mem->add_option("--target", target, "L, ZL or Z")
        ->check(CLI::IsMember({"L", "ZL", "Z"}));
    mem->add_option("table", table, "Table file (default: stdin)");
    mem->add_flag("--oracle", oracle, "Use exhaustive homomorphism search");

    auto* wit = app.add_subcommand("witness-report", "Verify the B_n witness family");
    wit->add_option("--n", n, "Family index, 3..8")->required();
    wit->add_flag("--dot", dot, "Append the Hasse diagram of B_n");

    auto* qi      = app.add_subcommand("qi", "Quasi-identity tools");
    qi->require_subcommand(1);
    auto* qi_gen  = qi->add_subcommand("gen", "Print Q:<n> or Qp:<n>");
    qi_gen->add_option("family", spec, "Q:<n> or Qp:<n>")->required();
    auto* qi_eval = qi->add_subcommand("eval", "Evaluate a quasi-identity on a table");
    qi_eval->add_option("qi-file", qi_file, "Quasi-identity file")->required();
    qi_eval->add_option("table", table, "Table file (default: stdin)");

    auto* iso = app.add_subcommand("iso", "Test two tables for isomorphism");
    iso->add_option("first", table, "Table file")->required();
    iso->add_option("second", table2, "Table file")->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }

    try {
      if (*gen) {
        out << format_table(generate(spec));
        return ok;
      }
      if (*val) {
        return do_validate(table, in, out);
      }
      if (*ana) {
        return do_analyze(table, dot, in, out);
      }
      if (*chk) {
        return do_check(which, table, in, out);
      }
      if (*mem) {
        return do_member(target, table, oracle, in, out);
      }
      if (*wit) {
        out << format_witness_report(witness_report(n), dot);
        return ok;
      }
      if (*qi_gen) {
        return do_qi_gen(spec, out);
      }
      if (*qi_eval) {
        return do_qi_eval(qi_file, table, in, out);
      }
      if (*iso) {
        return do_iso(table, table2, in, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    return input_error;
  }

}  // namespace lrbqv::cli
