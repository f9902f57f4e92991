// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiltlab/serialize.hpp"
#include "tiltlab/tilting.hpp"
#include "tiltlab/translate.hpp"
#include "tiltlab/transport.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tiltlab::ParseError(0, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dims_str(const tiltlab::DimVector& d) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << ")";
  return os.str();
}

std::string module_str(const tiltlab::IndTable& tbl, const tiltlab::ModuleSet& ids) {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) os << "+";
    os << dims_str(tbl.ind[ids[i]].dims);
  }
  return os.str();
}

std::string b_module_str(const tiltlab::IndTable& tbl, const tiltlab::BModule& b) {
  std::ostringstream os;
  bool first = true;
  for (int id : b.y_part) {
    if (!first) os << "+";
    os << dims_str(tbl.ind[id].dims);
    first = false;
  }
  for (int id : b.x_part) {
    if (!first) os << "+";
    os << "E" << dims_str(tbl.ind[id].dims);
    first = false;
  }
  return os.str();
}

void print_b_quiver_text(const tiltlab::IndTable& tbl, const tiltlab::BTiltingQuiver& bq) {
  std::cout << "b-tilting modules: " << bq.vertices.size() << "\n";
  for (size_t i = 0; i < bq.vertices.size(); ++i)
    std::cout << "B" << i << "[" << tiltlab::b_tag_name(bq.tags[i])
              << "]: " << b_module_str(tbl, bq.vertices[i]) << "\n";
  std::cout << "arrows: " << bq.arrows.size() << "\n";
  for (const auto& [u, v] : bq.arrows) std::cout << "B" << u << " -> B" << v << "\n";
}

int cmd_ind(const std::string& path) {
  tiltlab::Quiver q = tiltlab::parse_quiver(read_file(path));
  tiltlab::IndTable tbl = tiltlab::build_ind_table(q);
  for (int i = 0; i < tbl.size(); ++i)
    std::cout << i << ": " << dims_str(tbl.ind[i].dims) << "\n";
  return kExitOk;
}

int cmd_tilt(const std::string& path, bool as_json, bool as_dot) {
  tiltlab::Quiver q = tiltlab::parse_quiver(read_file(path));
  tiltlab::IndTable tbl = tiltlab::build_ind_table(q);
  std::vector<tiltlab::ModuleSet> tilts = tiltlab::enumerate_tilting(tbl);
  tiltlab::TiltingQuiver hq = tiltlab::hasse(tbl, tilts);
  tiltlab::TiltingQuiver xq = tiltlab::exchange_quiver(tbl, tilts);
  if (hq.vertices != xq.vertices || hq.arrows != xq.arrows)
    throw VerifyFailure("order Hasse diagram and exchange quiver disagree");

  if (as_json) {
    std::cout << tiltlab::tilting_quiver_to_json(tbl, hq) << "\n";
  } else if (as_dot) {
    std::cout << tiltlab::tilting_quiver_to_dot(tbl, hq);
  } else {
    std::cout << "tilting modules: " << hq.vertices.size() << "\n";
    for (size_t i = 0; i < hq.vertices.size(); ++i)
      std::cout << "T" << i << ": " << module_str(tbl, hq.vertices[i]) << "\n";
    std::cout << "arrows: " << hq.arrows.size() << "\n";
    for (const auto& [u, v] : hq.arrows) std::cout << "T" << u << " -> T" << v << "\n";
  }
  return kExitOk;
}

// Shared pipeline for one BB vertex: hereditary side, tilt data, oracle,
// transport, agreement flag.
struct BBRun {
  tiltlab::BBTiltData data;
  std::vector<tiltlab::ModuleSet> tilts;
  tiltlab::TiltingQuiver k;
  tiltlab::BTiltingQuiver oracle;
  tiltlab::BTiltingQuiver transported;
  bool agree = false;
};

BBRun run_bb(const tiltlab::IndTable& tbl, int vertex) {
  BBRun r;
  r.data = tiltlab::make_bb_tilt(tbl, vertex);
  r.tilts = tiltlab::enumerate_tilting(tbl);
  r.k = tiltlab::hasse(tbl, r.tilts);
  r.oracle = tiltlab::b_hasse(r.data);
  r.transported = tiltlab::transport_construct(r.data, r.k);
  r.agree = r.oracle.vertices == r.transported.vertices &&
            r.oracle.arrows == r.transported.arrows && r.oracle.tags == r.transported.tags;
  return r;
}

// Checks beyond quiver agreement: phi bijectivity and round trips, and the
// structural property suite.
std::vector<std::string> bb_failures(const BBRun& r) {
  const tiltlab::IndTable& tbl = *r.data.tbl;
  std::vector<std::string> fails;
  if (!r.agree) fails.push_back("transported quiver differs from the direct computation");

  std::vector<tiltlab::TiltTag> tags = tiltlab::partition_tilting(tbl, r.k.vertices, r.data.torsion);
  tiltlab::Admissibility adm = tiltlab::is_admissible(tbl, r.k.vertices, r.data.torsion);
  if (!adm.ok) fails.push_back("admissibility fails at tilting module " +
                               std::to_string(adm.tilt_index));

  std::vector<tiltlab::BModule> images;
  for (size_t i = 0; i < r.k.vertices.size(); ++i) {
    if (tags[i] == tiltlab::TiltTag::Other) continue;
    tiltlab::BModule b = tiltlab::phi(r.data, r.k.vertices[i]);
    images.push_back(b);
    if (!tiltlab::b_is_tilting(r.data, b))
      fails.push_back("phi image of T" + std::to_string(i) + " is not tilting");
    tiltlab::ModuleSet back = tiltlab::phi_inverse(r.data, b);
    if (back != r.k.vertices[i])
      fails.push_back("phi round trip fails at T" + std::to_string(i));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    fails.push_back("phi is not injective");
  if (images != r.oracle.vertices)
    fails.push_back("phi image set differs from the enumerated tilting modules");

  tiltlab::PropertyReport rep =
      tiltlab::verify_paper_properties(r.data, r.k, r.oracle);
  for (const auto& item : rep.items)
    if (!item.pass) fails.push_back(item.name + ": " + item.witness);
  return fails;
}

int cmd_bb(const std::string& path, int vertex, bool transport, bool verify, bool as_json,
           bool as_dot) {
  tiltlab::Quiver q = tiltlab::parse_quiver(read_file(path));
  tiltlab::IndTable tbl = tiltlab::build_ind_table(q);
  BBRun r = run_bb(tbl, vertex);
  const tiltlab::BTiltingQuiver& shown = transport ? r.transported : r.oracle;

  if (as_json) {
    std::cout << tiltlab::b_tilting_quiver_to_json(tbl, shown) << "\n";
  } else if (as_dot) {
    std::cout << tiltlab::b_tilting_quiver_to_dot(tbl, shown);
  } else {
    std::cout << "vertex: " << vertex << "\n";
    std::cout << "apr: " << (tiltlab::is_apr(r.data) ? "yes" : "no") << "\n";
    std::cout << "t0: " << module_str(tbl, r.data.t0_ids) << "\n";
    print_b_quiver_text(tbl, shown);
  }

  if (verify) {
    std::vector<std::string> fails = bb_failures(r);
    std::cout << (fails.empty() ? "verify: ok" : "verify: FAIL") << "\n";
    for (const std::string& f : fails) std::cout << "  " << f << "\n";
    if (!fails.empty()) return kExitVerifyFail;
  } else if (!r.agree) {
    std::cerr << "error: transported quiver differs from the direct computation\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_tilted(const std::string& path, const std::vector<int>& t0, bool as_json, bool as_dot) {
  tiltlab::Quiver q = tiltlab::parse_quiver(read_file(path));
  tiltlab::IndTable tbl = tiltlab::build_ind_table(q);
  tiltlab::GeneralTiltData d = tiltlab::make_general_tilt(tbl, t0);

  std::vector<tiltlab::ModuleSet> tilts = tiltlab::enumerate_tilting(tbl);
  std::vector<tiltlab::TiltTag> tags = tiltlab::partition_tilting(tbl, tilts, d.torsion);
  tiltlab::Admissibility adm = tiltlab::is_admissible(tbl, tilts, d.torsion);
  if (!adm.ok)
    throw tiltlab::AdmissibilityViolation(
        "summand " + dims_str(tbl.ind[adm.summand_id].dims) + " of tilting module " +
        std::to_string(adm.tilt_index) + " is generated by the torsion-free part");

  tiltlab::BTiltingQuiver bq = tiltlab::b_hasse(d);
  if (as_json) {
    std::cout << tiltlab::b_tilting_quiver_to_json(tbl, bq) << "\n";
    return kExitOk;
  }
  if (as_dot) {
    std::cout << tiltlab::b_tilting_quiver_to_dot(tbl, bq);
    return kExitOk;
  }

  std::cout << "t0: " << module_str(tbl, d.t0_ids) << "\n";
  for (size_t i = 0; i < tilts.size(); ++i) {
    if (tags[i] == tiltlab::TiltTag::Other) continue;
    tiltlab::BModule b = tiltlab::phi(d, tilts[i]);
    std::cout << "T" << i << "[" << tiltlab::tilt_tag_name(tags[i])
              << "]: " << module_str(tbl, tilts[i]) << " => " << b_module_str(tbl, b) << "\n";
  }
  print_b_quiver_text(tbl, bq);
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  tiltlab::Quiver q = tiltlab::parse_quiver(read_file(path));
  tiltlab::IndTable tbl = tiltlab::build_ind_table(q);

  bool any_fail = false;
  int eligible = 0;
  for (int v = 1; v <= q.n; ++v) {
    BBRun r;
    try {
      r = run_bb(tbl, v);
    } catch (const tiltlab::SimpleIsInjective&) {
      std::cout << "vertex " << v << ": skipped (simple is injective)\n";
      continue;
    }
    ++eligible;
    std::vector<std::string> fails = bb_failures(r);
    if (fails.empty()) {
      std::cout << "vertex " << v << ": ok\n";
    } else {
      any_fail = true;
      std::cout << "vertex " << v << ": FAIL\n";
      for (const std::string& f : fails) std::cout << "  " << f << "\n";
    }
  }
  std::cout << (any_fail ? "verify: FAIL" : "verify: ok") << " (" << eligible
            << " eligible vertices)\n";
  return any_fail ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tilting quivers of representation-finite path algebras"};
  app.require_subcommand(1);

  std::string file;
  int vertex = 0;
  bool as_json = false, as_dot = false, transport = false, verify = false;
  std::vector<int> t0_ids;

  CLI::App* ind = app.add_subcommand("ind", "list the indecomposable modules");
  ind->add_option("file", file, "quiver file")->required();

  CLI::App* tilt = app.add_subcommand("tilt", "tilting quiver of the path algebra");
  tilt->add_option("file", file, "quiver file")->required();
  CLI::Option* tilt_json = tilt->add_flag("--json", as_json, "emit JSON");
  tilt->add_flag("--dot", as_dot, "emit DOT")->excludes(tilt_json);

  CLI::App* bb = app.add_subcommand("bb", "tilted-side tilting quiver for a BB tilt");
  bb->add_option("file", file, "quiver file")->required();
  bb->add_option("--vertex", vertex, "vertex of the exchanged simple")->required();
  bb->add_flag("--transport", transport, "print the transported quiver");
  bb->add_flag("--verify", verify, "run the property suite");
  CLI::Option* bb_json = bb->add_flag("--json", as_json, "emit JSON");
  bb->add_flag("--dot", as_dot, "emit DOT")->excludes(bb_json);

  CLI::App* tilted = app.add_subcommand("tilted", "tilted-side data for a general tilt");
  tilted->add_option("file", file, "quiver file")->required();
  tilted->add_option("--t0", t0_ids, "summand ids of the tilting module")
      ->required()
      ->delimiter(',');
  CLI::Option* tilted_json = tilted->add_flag("--json", as_json, "emit JSON");
  tilted->add_flag("--dot", as_dot, "emit DOT")->excludes(tilted_json);

  CLI::App* ver = app.add_subcommand("verify", "run all checks on every eligible vertex");
  ver->add_option("file", file, "quiver file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (ind->parsed()) return cmd_ind(file);
    if (tilt->parsed()) return cmd_tilt(file, as_json, as_dot);
    if (bb->parsed()) return cmd_bb(file, vertex, transport, verify, as_json, as_dot);
    if (tilted->parsed()) return cmd_tilted(file, t0_ids, as_json, as_dot);
    if (ver->parsed()) return cmd_verify(file);
  } catch (const VerifyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const tiltlab::ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
