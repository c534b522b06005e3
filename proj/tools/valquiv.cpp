// valquiv: valued quivers, admissible sequences, and Weyl group words on the
// command line. All outputs are stable key=value or bare data lines; module
// errors exit 1 with an error= line, usage problems exit 2.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "valquiv/oracle.hpp"
#include "valquiv/preprojective.hpp"
#include "valquiv/quiver_io.hpp"

namespace {

using namespace valquiv;

const char* yesno(bool b) { return b ? "true" : "false"; }

template <typename C>
std::string joined(const C& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string vec_str(const RootVector& v) { return joined(v.coords()); }

// Letters arrive as raw tokens so that "/" can separate two sequences.
std::vector<int> to_letters(const std::vector<std::string>& toks) {
  std::vector<int> out;
  out.reserve(toks.size());
  for (const std::string& t : toks) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size() || t.empty())
      throw CLI::ValidationError("letters", "'" + t + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> split_pair(const std::vector<std::string>& toks) {
  auto slash = std::find(toks.begin(), toks.end(), "/");
  if (slash == toks.end())
    throw CLI::ValidationError("sequences", "expected '<letters> / <letters>'");
  return {to_letters({toks.begin(), slash}), to_letters({slash + 1, toks.end()})};
}

// The empty sequence prints as "-", everything else as its canonical form.
std::string seq_str(const AdmissibleSequence& s) {
  if (s.empty()) return "-";
  return to_string(canonical_form(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valued quiver, admissible sequence, and Weyl group toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> raw;  // letters, possibly with a "/" separator
  int arg_r = 0, arg_x = 0, max_r = 0, max_m = 0, max_len = 0;
  long cap = 10000;
  std::vector<int> perm;

  CLI::App* validate = app.add_subcommand("validate", "check the quiver file");
  validate->add_option("file", file)->required();

  CLI::App* cartan = app.add_subcommand("cartan", "print the Cartan matrix");
  cartan->add_option("file", file)->required();

  CLI::App* word_reduced = app.add_subcommand("word-reduced", "test a Weyl group word");
  word_reduced->add_option("file", file)->required();
  word_reduced->add_option("letters", raw);

  CLI::App* word_length = app.add_subcommand("word-length", "Coxeter length of a word");
  word_length->add_option("file", file)->required();
  word_length->add_option("letters", raw);

  CLI::App* seq_validate = app.add_subcommand("seq-validate", "check a (+)-admissible sequence");
  seq_validate->add_option("file", file)->required();
  seq_validate->add_option("letters", raw);

  CLI::App* seq_canon = app.add_subcommand("seq-canon", "canonical block form");
  seq_canon->add_option("file", file)->required();
  seq_canon->add_option("letters", raw);

  CLI::App* seq_equiv = app.add_subcommand("seq-equiv", "equivalence of two sequences");
  seq_equiv->add_option("file", file)->required();
  seq_equiv->add_option("letters", raw);

  CLI::App* seq_meet = app.add_subcommand("seq-meet", "lattice meet of two sequences");
  seq_meet->add_option("file", file)->required();
  seq_meet->add_option("letters", raw);

  CLI::App* seq_join = app.add_subcommand("seq-join", "lattice join of two sequences");
  seq_join->add_option("file", file)->required();
  seq_join->add_option("letters", raw);

  CLI::App* seq_principal = app.add_subcommand("seq-principal", "principal sequence S_{r,x}");
  seq_principal->add_option("file", file)->required();
  seq_principal->add_option("r", arg_r)->required();
  seq_principal->add_option("x", arg_x)->required();

  CLI::App* seq_realizable =
      app.add_subcommand("seq-realizable", "is the sequence an annihilating sequence");
  seq_realizable->add_option("file", file)->required();
  seq_realizable->add_option("letters", raw);

  CLI::App* preproj_dim = app.add_subcommand("preproj-dim", "dimension trace of a sequence");
  preproj_dim->add_option("file", file)->required();
  preproj_dim->add_option("letters", raw);

  CLI::App* preproj_enum = app.add_subcommand("preproj-enum", "classes in translation-quiver order");
  preproj_enum->add_option("file", file)->required();
  preproj_enum->add_option("--max-r", max_r)->required();

  CLI::App* coxeter = app.add_subcommand("coxeter-powers", "lengths of Coxeter element powers");
  coxeter->add_option("file", file)->required();
  coxeter->add_option("--perm", perm)->required()->expected(-1);
  coxeter->add_option("--max-m", max_m)->required();

  CLI::App* help = app.add_subcommand("help", "print usage");

  CLI::App* orc = app.add_subcommand("oracle", "slow reference implementations");
  orc->group("");  // hidden
  orc->require_subcommand(1);
  CLI::App* orc_bfs = orc->add_subcommand("bfs", "Cayley graph closure");
  orc_bfs->add_option("file", file)->required();
  orc_bfs->add_option("--cap", cap);
  CLI::App* orc_enum = orc->add_subcommand("enum", "all admissible sequences");
  orc_enum->add_option("file", file)->required();
  orc_enum->add_option("--max-len", max_len)->required();
  CLI::App* orc_closure = orc->add_subcommand("closure", "commutation closure");
  orc_closure->add_option("file", file)->required();
  orc_closure->add_option("letters", raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (help->parsed()) {
    // app.help() would delegate to the parsed `help` subcommand itself.
    std::cout << app.get_formatter()->make_help(&app, app.get_name(), CLI::AppFormatMode::Normal);
    return 0;
  }

  try {
    QuiverFile q = load_quiver(file);
    CartanMatrix a(q.graph);

    if (validate->parsed()) {
      std::cout << "ok=true\n";
      std::cout << "symmetrizer=" << joined(symmetrizer(q.graph)) << "\n";
      std::cout << "finite_type=" << yesno(is_finite_type(q.graph)) << "\n";
    } else if (cartan->parsed()) {
      for (int i = 1; i <= a.rank(); ++i) {
        std::string row;
        for (int j = 1; j <= a.rank(); ++j) {
          if (j > 1) row += ' ';
          row += std::to_string(a.at(i, j));
        }
        std::cout << row << "\n";
      }
    } else if (word_reduced->parsed()) {
      bool red = is_reduced(a, Word{to_letters(raw)});
      std::cout << "reduced=" << yesno(red) << "\n";
    } else if (word_length->parsed()) {
      std::vector<int> ls = to_letters(raw);
      long c = default_length_cap(a.rank(), ls.size());
      long len = length(a, element_of(a, Word{ls}), c);
      std::cout << "length=" << len << "\n";
    } else if (seq_validate->parsed()) {
      AdmissibleSequence s = AdmissibleSequence::validate(require_orientation(q), to_letters(raw));
      std::cout << "ok=true\n";
      std::cout << "length=" << s.length() << "\n";
      std::cout << "multiplicity=" << joined(multiplicity(s)) << "\n";
    } else if (seq_canon->parsed()) {
      AdmissibleSequence s = AdmissibleSequence::validate(require_orientation(q), to_letters(raw));
      std::cout << to_string(canonical_form(s)) << "\n";
    } else if (seq_equiv->parsed()) {
      auto [ls, lt] = split_pair(raw);
      const Orientation& o = require_orientation(q);
      bool eq = is_equivalent(AdmissibleSequence::validate(o, ls),
                              AdmissibleSequence::validate(o, lt));
      std::cout << "equivalent=" << yesno(eq) << "\n";
    } else if (seq_meet->parsed() || seq_join->parsed()) {
      auto [ls, lt] = split_pair(raw);
      const Orientation& o = require_orientation(q);
      AdmissibleSequence s = AdmissibleSequence::validate(o, ls);
      AdmissibleSequence t = AdmissibleSequence::validate(o, lt);
      std::cout << seq_str(seq_meet->parsed() ? meet(s, t) : join(s, t)) << "\n";
    } else if (seq_principal->parsed()) {
      AdmissibleSequence s = principal_sequence(require_orientation(q), arg_r, arg_x);
      std::cout << joined(s.letters()) << "\n";
    } else if (seq_realizable->parsed()) {
      AdmissibleSequence s = AdmissibleSequence::validate(require_orientation(q), to_letters(raw));
      bool ok = realizable(a, s);
      std::cout << "realizable=" << yesno(ok) << "\n";
    } else if (preproj_dim->parsed()) {
      AdmissibleSequence s = AdmissibleSequence::validate(require_orientation(q), to_letters(raw));
      PositivityTrace tr = dim_of_sequence(a, s);
      std::cout << "start=" << vec_str(tr.start) << "\n";
      for (const TraceStep& st : tr.steps)
        std::cout << "step letter=" << st.letter << " vec=" << vec_str(st.vec) << "\n";
      if (tr.positive)
        std::cout << "dim=" << vec_str(tr.dim()) << "\n";
      else
        std::cout << "zero_at=" << tr.zero_position << "\n";
    } else if (preproj_enum->parsed()) {
      for (const ClassEntry& e : enumerate_classes(q.graph, require_orientation(q), max_r)) {
        std::cout << e.id.r << " " << e.id.x << " : ";
        if (e.trace.positive)
          std::cout << "dim " << vec_str(e.trace.dim()) << "\n";
        else
          std::cout << "dead zero_at=" << e.trace.zero_position << "\n";
      }
    } else if (coxeter->parsed()) {
      std::vector<long> lens = coxeter_power_lengths(a, perm, max_m);
      bool consistent = true;
      for (int m = 1; m <= max_m; ++m) {
        long expected = static_cast<long>(m) * a.rank();
        std::cout << "m=" << m << " len=" << lens[static_cast<std::size_t>(m - 1)]
                  << " expected=" << expected << "\n";
        consistent = consistent && lens[static_cast<std::size_t>(m - 1)] == expected;
      }
      std::cout << "weyl_infinite_consistent=" << yesno(consistent) << "\n";
    } else if (orc_bfs->parsed()) {
      oracle::CayleyTable t = oracle::bfs_lengths(a, cap);
      std::cout << "finite=" << yesno(t.finite) << "\n";
      std::cout << "order=" << t.order << "\n";
      std::cout << "max_length=" << t.max_length << "\n";
    } else if (orc_enum->parsed()) {
      for (const auto& ls : oracle::enumerate_admissible(require_orientation(q), max_len))
        std::cout << (ls.empty() ? "-" : joined(ls)) << "\n";
    } else if (orc_closure->parsed()) {
      for (const auto& ls :
           oracle::equivalence_closure(require_orientation(q), to_letters(raw)))
        std::cout << (ls.empty() ? "-" : joined(ls)) << "\n";
    }
  } catch (const QuiverError& e) {
    std::cout << "error=" << errc_name(e.code()) << "\n";
    if (e.position() >= 0) std::cout << "position=" << e.position() << "\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
