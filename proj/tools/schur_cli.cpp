#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "schur/sequences.hpp"

namespace {

using namespace schur;

enum ExitCode { kOk = 0, kInvalid = 1, kParse = 2, kDisagreement = 3 };

struct Options {
  std::string group = "h1";
  int p = 0;
  std::string seq;
  bool canonical = false;
  bool mod4_3 = false;
  std::string out;
  std::string sring_file;
  std::string positional;
  bool emit_generators = false;
  unsigned threads = 1;
};

void add_sequence_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "odd prime");
  cmd->add_option("--seq", o.seq, "suitable sequence, e.g. 0,4,2,5,6,1");
  cmd->add_flag("--canonical", o.canonical, "x_i = (p-1)(i-1)/2 mod p");
  cmd->add_flag("--mod4-3", o.mod4_3, "rearranged sequence with x_2 = (p+1)/2, p = 3 mod 4");
}

void add_group_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "h1 or h2")->check(CLI::IsMember({"h1", "h2"}));
}

void add_input_flags(CLI::App* cmd, Options& o) {
  add_group_flags(cmd, o);
  add_sequence_flags(cmd, o);
  cmd->add_option("--sring", o.sring_file, "partition file ('-' for stdin)");
  cmd->add_option("file", o.positional, "partition file ('-' for stdin)");
}

bool has_sequence(const Options& o) { return !o.seq.empty() || o.canonical || o.mod4_3; }

SuitableSequence sequence_from(const Options& o) {
  if (o.p == 0) throw ParseError("--p is required");
  const int choices = int(!o.seq.empty()) + int(o.canonical) + int(o.mod4_3);
  if (choices != 1) throw ParseError("give exactly one of --seq, --canonical, --mod4-3");
  if (o.canonical) return canonical_sequence(o.p);
  if (o.mod4_3) return mod4_3_sequence(o.p);
  return make_suitable(parse_sequence(o.seq), o.p);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const Options& o) {
  const std::string path = !o.sring_file.empty() ? o.sring_file : o.positional;
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_all(f);
}

SRing load_sring(const Options& o) {
  if (has_sequence(o)) {
    const SuitableSequence s = sequence_from(o);
    return sring_from_sequence(build_group({parse_family(o.group), o.p}), s);
  }
  return validate_sring(parse_partition(read_input(o)));
}

AutOptions aut_options(const Options& o) {
  AutOptions a;
  a.threads = std::max(1u, o.threads);
  return a;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Schur rings over the non-abelian groups of order p^3"};
  app.require_subcommand(1);
  Options o;
  int code = kOk;

  auto* group = app.add_subcommand("group", "group utilities")->require_subcommand(1);
  auto* group_info = group->add_subcommand("info", "print the group and its center");
  add_group_flags(group_info, o);
  group_info->add_option("--p", o.p, "odd prime")->required();
  group_info->callback([&] {
    cli::print_group_info(std::cout, *build_group({parse_family(o.group), o.p}));
  });

  auto* sequence = app.add_subcommand("sequence", "suitable sequences")->require_subcommand(1);
  auto* seq_enum = sequence->add_subcommand("enum", "list all suitable sequences");
  seq_enum->add_option("--p", o.p, "odd prime")->required();
  seq_enum->callback([&] {
    std::ostringstream s;
    for (const auto& x : enumerate_suitable(o.p)) s << format_sequence(x.x) << "\n";
    write_output(o, s.str());
  });
  auto* seq_make = sequence->add_subcommand("make", "build or check one sequence");
  add_sequence_flags(seq_make, o);
  seq_make->callback([&] { write_output(o, format_sequence(sequence_from(o).x) + "\n"); });

  auto* sring = app.add_subcommand("sring", "S-ring construction and checks")->require_subcommand(1);
  auto* build = sring->add_subcommand("build", "build the S-ring of a suitable sequence");
  add_group_flags(build, o);
  add_sequence_flags(build, o);
  build->add_option("--out", o.out, "output file");
  build->callback([&] {
    const SRing sr = load_sring(o);
    write_output(o, format_partition(sr.partition()));
  });
  auto* validate = sring->add_subcommand("validate", "check the S-ring axioms");
  add_input_flags(validate, o);
  validate->callback([&] {
    const SRing sr = load_sring(o);
    std::cout << sr.group().header() << "\nvalid: " << sr.rank() << " basic sets\n";
  });
  auto* info = sring->add_subcommand("info", "invariants and the scheme lemma suite");
  add_input_flags(info, o);
  info->callback([&] {
    const SRing sr = load_sring(o);
    std::ostringstream s;
    cli::print_sring_info(s, sr);
    std::cout << s.str();
  });

  auto* schurity = app.add_subcommand("schurity", "decide Schurity")->require_subcommand(1);
  for (const char* method : {"aut", "compat", "all"}) {
    auto* cmd = schurity->add_subcommand(method);
    add_input_flags(cmd, o);
    cmd->add_option("--threads", o.threads, "worker threads");
    cmd->add_flag("--emit-generators", o.emit_generators, "print automorphism generators");
    const std::string m = method;
    cmd->callback([&, m] {
      const CayleyScheme cs(load_sring(o));
      std::cout << cs.group().header() << "\n";
      if (m == "aut")
        cli::print_aut_report(std::cout, cs, aut_options(o), o.emit_generators);
      else if (m == "compat")
        cli::print_compat_report(std::cout, cs);
      else
        cli::print_schurity_all(std::cout, cs, aut_options(o), o.emit_generators);
    });
  }
  schurity->description("decide Schurity by automorphisms (aut), compatibility (compat) or both");

  auto* scheme = app.add_subcommand("scheme", "Cayley scheme output")->require_subcommand(1);
  auto* sexport = scheme->add_subcommand("export", "write the color matrix");
  add_input_flags(sexport, o);
  sexport->add_option("--out", o.out, "output file");
  sexport->callback([&] { write_output(o, export_scheme(CayleyScheme(load_sring(o)))); });

  auto* demo = app.add_subcommand("demo", "reproduce worked examples")->require_subcommand(1);
  auto* ex11 = demo->add_subcommand("example-1.1", "the two 7-S-rings over H1(7)");
  ex11->add_option("--threads", o.threads, "worker threads");
  ex11->callback([&] { code = cli::run_demo_example_1_1(std::cout, aut_options(o)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const schur::cli::Disagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const schur::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const schur::InvalidPrime& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const schur::Error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
