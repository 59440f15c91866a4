// Copyright 2026 The quandles Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quandles/cli.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "quandles/alexander.hpp"
#include "quandles/group.hpp"
#include "quandles/iso.hpp"
#include "quandles/knots.hpp"

namespace quandles::cli {

namespace {

struct UsageError {
  std::string message;
};

int parse_int(const std::string& arg, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw UsageError{what + " must be an integer, got '" + arg + "'"};
  }
  return value;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void print_permutation(std::ostream& out, const std::vector<int>& perm) {
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) out << ' ';
    out << perm[i];
  }
}

void emit_with_provenance(std::ostream& out, const std::string& header,
                          const Quandle& q) {
  out << "# " << header << '\n' << to_text(q);
}

int run_build(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out) {
  if (args.empty()) throw UsageError{"build requires a family argument"};
  const std::string& family = args[0];
  if (family == "trivial" || family == "dihedral") {
    if (args.size() != 2) throw UsageError{"build " + family + " <p>"};
    const int p = parse_int(args[1], "p");
    out << to_text(family == "trivial" ? trivial_quandle(p)
                                       : dihedral_quandle(p));
    return 0;
  }
  if (family == "alexander" || family == "quotient") {
    if (family == "alexander" ? args.size() != 3 : args.size() < 4) {
      throw UsageError{"build " + family +
                       " <groupfile> <autfile>" +
                       (family == "quotient" ? " <subgroup elements...>" : "")};
    }
    const FiniteGroup g = parse_group_text(read_input(args[1], in));
    std::vector<int> perm = parse_automorphism_text(read_input(args[2], in));
    if (perm.size() != static_cast<size_t>(g.order())) {
      throw Error("automorphism length " + std::to_string(perm.size()) +
                  " does not match group order " + std::to_string(g.order()));
    }
    const GroupAutomorphism phi =
        automorphism_from_permutation(g, std::move(perm));
    if (family == "alexander") {
      out << to_text(alexander_quandle(g, phi));
      return 0;
    }
    std::vector<int> members;
    for (size_t i = 3; i < args.size(); ++i) {
      members.push_back(parse_int(args[i], "subgroup element"));
    }
    const Subgroup h = make_subgroup(g, std::move(members));
    out << to_text(quotient_quandle(g, phi, h));
    return 0;
  }
  throw UsageError{"unknown build family '" + family + "'"};
}

int run_iso(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out) {
  if (args.size() != 2) throw UsageError{"iso <fileA> <fileB>"};
  if (args[0] == "-" && args[1] == "-") {
    throw UsageError{"only one of the iso arguments may read standard input"};
  }
  const Quandle a = load_quandle_file(args[0], in);
  const Quandle b = load_quandle_file(args[1], in);
  const IsoCertificate cert = are_isomorphic(a, b);
  if (cert.isomorphic) {
    out << "iso ";
    print_permutation(out, cert.bijection);
    out << '\n';
  } else {
    out << "noniso " << cert.refutation << '\n';
  }
  return 0;
}

int run_check(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out) {
  if (args.size() != 1) throw UsageError{"check <quandlefile>"};
  const Quandle q = parse_quandle_text(read_input(args[0], in));
  const QuandleReport report = validate_quandle(q);
  if (report.ok) {
    out << "ok\n";
    return 0;
  }
  switch (report.violated) {
    case QuandleAxiom::Q1:
      out << "violation Q1 x=" << report.x << '\n';
      break;
    case QuandleAxiom::Q2:
      out << "violation Q2 x=" << report.x << " y=" << report.y << '\n';
      break;
    default:
      out << "violation Q3 x=" << report.x << " y=" << report.y
          << " z=" << report.z << '\n';
      break;
  }
  return 1;
}

int run_orbits(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out) {
  if (args.size() != 1) throw UsageError{"orbits <quandlefile>"};
  const Quandle q = load_quandle_file(args[0], in);
  for (const auto& orbit : orbits(q)) {
    print_permutation(out, orbit);
    out << '\n';
  }
  return 0;
}

int run_classes(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw UsageError{"classes <p>"};
  for (const auto& cls : equivalence_classes(parse_int(args[0], "p"))) {
    print_permutation(out, cls.representatives);
    out << '\n';
  }
  return 0;
}

int run_tuple(const std::vector<std::string>& args, std::ostream& out) {
  int p_max = 1000;
  std::vector<std::string> positional;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--max-p") {
      if (i + 1 == args.size()) throw UsageError{"--max-p requires a value"};
      p_max = parse_int(args[++i], "--max-p");
    } else {
      positional.push_back(args[i]);
    }
  }
  if (positional.size() != 1) throw UsageError{"tuple <l> [--max-p N]"};
  const int l = parse_int(positional[0], "l");
  const auto found = find_tuple(l, p_max);
  if (!found) {
    out << "notfound\n";
    return 1;
  }
  out << found->p;
  for (int q : found->q) out << ' ' << q;
  out << '\n';
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out) {
  if (args.empty()) throw UsageError{"no subcommand given"};
  const std::string& cmd = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "help") {
    out << usage();
    return 0;
  }
  if (cmd == "build") return run_build(rest, in, out);
  if (cmd == "trefoil") {
    if (rest.size() != 1) throw UsageError{"trefoil <m>"};
    const int m = parse_int(rest[0], "m");
    const Quandle q = twist_spun_trefoil_quandle(m);
    const GroupAutomorphism& phi = trefoil_monodromy(m);
    std::ostringstream header;
    header << "trefoil m=" << m << " group " << phi.group->name()
           << " monodromy ";
    print_permutation(header, phi.perm);
    emit_with_provenance(out, header.str(), q);
    return 0;
  }
  if (cmd == "twobridge") {
    if (rest.size() != 2) throw UsageError{"twobridge <p> <q>"};
    const int p = parse_int(rest[0], "p");
    const int q_param = parse_int(rest[1], "q");
    const Quandle q = twist_spun_two_bridge_quandle(p, q_param);
    std::ostringstream header;
    header << "twobridge p=" << p << " q=" << q_param << " group Z/" << p
           << " monodromy ";
    std::vector<int> inv_perm(p);
    for (int a = 0; a < p; ++a) inv_perm[a] = (p - a) % p;
    print_permutation(header, inv_perm);
    emit_with_provenance(out, header.str(), q);
    return 0;
  }
  if (cmd == "check") return run_check(rest, in, out);
  if (cmd == "iso") return run_iso(rest, in, out);
  if (cmd == "orbits") return run_orbits(rest, in, out);
  if (cmd == "classes") return run_classes(rest, out);
  if (cmd == "tuple") return run_tuple(rest, out);
  throw UsageError{"unknown subcommand '" + cmd + "'"};
}

}  // namespace

Quandle load_quandle_file(const std::string& path, std::istream& in) {
  Quandle q = parse_quandle_text(read_input(path, in));
  const QuandleReport report = validate_quandle(q);
  if (!report.ok) throw Error(path + ": " + report.message);
  return q;
}

std::string usage() {
  return
      "usage: quandle <subcommand> [args]\n"
      "\n"
      "  build trivial <p>                          trivial quandle table\n"
      "  build dihedral <p>                         dihedral quandle table\n"
      "  build alexander <groupfile> <autfile>      generalized Alexander quandle\n"
      "  build quotient <groupfile> <autfile> <e0> [e1 ...]\n"
      "                                             quotient by a fixed subgroup\n"
      "  trefoil <m>                                m-twist-spun trefoil quandle, m in 1..5\n"
      "  twobridge <p> <q>                          2-twist-spun 2-bridge knot quandle\n"
      "  check <quandlefile>                        axiom report (ok / violation ...)\n"
      "  iso <fileA> <fileB>                        isomorphism certificate\n"
      "  orbits <quandlefile>                       orbit partition, one orbit per line\n"
      "  classes <p>                                2-bridge equivalence classes mod p\n"
      "  tuple <l> [--max-p N]                      inequivalent knots sharing a quandle\n"
      "\n"
      "'-' in place of a quandle file reads standard input.\n";
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace quandles::cli
