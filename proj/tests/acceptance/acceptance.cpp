// One PASS/FAIL line per acceptance criterion. Each criterion also produces a
// transcript; criterion 11 reruns 1-10 with eight threads and compares them.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "srcomplex/bouquet.hpp"
#include "srcomplex/cli.hpp"
#include "srcomplex/graver.hpp"
#include "srcomplex/lawrence.hpp"
#include "srcomplex/robustness.hpp"
#include "support/fixtures.hpp"

using namespace srcomplex;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::string transcript;
};

struct Check {
  Outcome& out;
  void require(bool ok, const std::string& what) {
    if (!ok && out.pass) out.summary = "failed: " + what;
    out.pass = out.pass && ok;
  }
};

json cli_json(const std::vector<std::string>& args, std::size_t threads, std::string& transcript) {
  std::vector<std::string> full = args;
  full.push_back("--json");
  full.push_back("--threads");
  full.push_back(std::to_string(threads));
  const cli::Report r = cli::execute(full);
  transcript += r.out + r.err;
  if (r.exit_code != 0) return json();
  return json::parse(r.out);
}

std::string faces_text(const SimplicialComplex& c) {
  std::string out;
  for (const auto& f : c.maximal_faces()) out += OmegaSet(c.ground_size(), f).to_string();
  return out + " dim=" + std::to_string(c.dimension());
}

// Planar and monomial-curve fixtures in general position, plus the named files.
std::vector<IntMatrix> all_simple_fixtures() {
  std::vector<IntMatrix> out = fixtures::general_position_fixtures();
  for (const char* name : {"T57.mat", "A465.mat", "ci465_m2.mat"}) out.push_back(fixtures::load_fixture(name));
  return out;
}

Outcome criterion_1(std::size_t threads) {
  Outcome o;
  Check c{o};
  const auto start = std::chrono::steady_clock::now();
  const json r = cli_json({"complex", fixtures::data_path("T57.mat")}, threads, o.transcript);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(!r.is_null(), "complex command failed");
  if (!o.pass) return o;
  const json& res = r["result"];
  c.require(res["maximal_faces"] == json::parse("[[1,3,4,5,7]]"), "maximal faces");
  c.require(res["face_count"] == 32, "face count");
  c.require(res["dimension"] == 4 && res["rank"] == 5, "dimension 4 = rank - 1");
  c.require(seconds <= 600.0, "runtime budget");
  if (o.pass) o.summary = "complex(T57) = 2^{1,3,4,5,7}, 32 faces, dim 4 = rank - 1";
  return o;
}

Outcome criterion_2(std::size_t threads) {
  Outcome o;
  Check c{o};
  const auto graver = graver_basis(fixtures::load_fixture("T57.mat"), GraverOptions{threads});
  for (const OmegaSet& omega : {OmegaSet(7, {2}), OmegaSet(7, {6})}) {
    const bool face = omega_is_face(graver, omega, threads);
    o.transcript += omega.to_string() + ":" + (face ? "face" : "non-face") + "\n";
    c.require(!face, omega.to_string() + " reported as a face");
  }
  if (o.pass) o.summary = "{2} and {6} are non-faces of T57";
  return o;
}

Outcome criterion_3(std::size_t threads) {
  Outcome o;
  Check c{o};
  const std::string t57 = fixtures::data_path("T57.mat");
  const std::string reference = fixtures::data_path("glm_13x15.mat");
  const std::vector<std::string> glm_args{"glm", t57, "--c", "7,1,2027", "--c", "1,-1", "--c", "1", "--c", "2,3,7",
                                          "--c", "11,1", "--c", "4,-1,-27", "--c", "1"};
  const json built = cli_json(glm_args, threads, o.transcript);
  c.require(!built.is_null(), "glm command failed");
  if (!o.pass) return o;

  const IntMatrix expected = fixtures::load_fixture("glm_13x15.mat");
  GLMSpec<Integer> spec{fixtures::load_fixture("T57.mat"),
                        {make_vector({7, 1, 2027}), make_vector({1, -1}), make_vector({1}), make_vector({2, 3, 7}),
                         make_vector({11, 1}), make_vector({4, -1, -27}), make_vector({1})},
                        std::nullopt};
  c.require(build_generalized_lawrence(spec) == expected, "default Bezout coefficients reproduce the matrix");
  spec.lambda = std::vector<IntVec>{make_vector({0, 1, 0}), make_vector({1, 0}),    make_vector({1}),
                                    make_vector({-1, 1, 0}), make_vector({0, 1}),   make_vector({0, -1, 0}),
                                    make_vector({1})};
  c.require(build_generalized_lawrence(spec) == expected, "reference lambda choices reproduce the matrix");

  const json bouquets = cli_json({"bouquets", reference}, threads, o.transcript);
  c.require(!bouquets.is_null() && bouquets["result"]["bouquets"].size() == 7, "seven bouquets");
  if (!o.pass) return o;
  std::vector<int> mixed;
  for (const auto& b : bouquets["result"]["bouquets"]) {
    if (b["class"] == "mixed") mixed.push_back(b["index"].get<int>());
  }
  c.require(mixed == std::vector<int>{2, 6}, "mixed bouquets are exactly {2,6}");
  c.require(bouquet_ideal(expected).matrix == fixtures::load_fixture("T57.mat"), "bouquet ideal is T57");

  const json robust = cli_json({"robust", reference}, threads, o.transcript);
  c.require(!robust.is_null() && robust["result"]["strongly_robust"] == true, "strongly robust");
  if (o.pass) o.summary = "13x15 matrix reproduced; 7 bouquets, mixed {2,6}; bouquet ideal T57; strongly robust";
  return o;
}

Outcome criterion_4(std::size_t threads) {
  Outcome o;
  Check c{o};
  const IntMatrix t = make_matrix({{4, 6, 5}});
  const auto graver_t = graver_basis(t, GraverOptions{threads});
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const OmegaSet omega = OmegaSet::from_mask(3, mask);
    const auto direct = graver_basis(lawrence_lift_omega(t, omega), GraverOptions{threads});
    const auto lifted = lifted_graver(graver_t, omega);
    o.transcript += omega.to_string() + ":" + std::to_string(direct.size()) + "/" + std::to_string(lifted.size()) + "\n";
    c.require(direct == lifted, "bijection at " + omega.to_string());
  }
  if (o.pass) o.summary = "Gr(lift_w(4 6 5)) = D_w(Gr) for all 8 subsets";
  return o;
}

Outcome criterion_5(std::size_t threads) {
  Outcome o;
  Check c{o};
  for (const IntMatrix& a : {make_matrix({{1, 1}}), make_matrix({{1, 2}}), make_matrix({{4, 6, 5}}),
                             make_matrix({{1, 1, 1}, {1, 2, 3}})}) {
    const auto graver = graver_basis(a, GraverOptions{threads});
    const long long bound = graver.max_norm().to_int64() + 1;
    const auto brute = graver_brute_force(a, bound);
    bool same = brute.size() == graver.size();
    for (std::size_t i = 0; same && i < brute.size(); ++i) same = equal_vectors(brute[i], graver.representatives()[i]);
    o.transcript += write_matrix(a) + "K=" + std::to_string(bound) + " size=" + std::to_string(graver.size()) + "\n";
    c.require(same, "brute force disagrees on\n" + write_matrix(a));
  }
  if (o.pass) o.summary = "completion = brute force on 4 matrices (K = max norm + 1)";
  return o;
}

Outcome criterion_6(std::size_t threads) {
  Outcome o;
  Check c{o};
  const auto fixtures_list = fixtures::general_position_fixtures();
  for (const IntMatrix& t : fixtures_list) {
    const auto complex = strongly_robust_complex(t, ComplexOptions{threads});
    const Index r = rank(t);
    o.transcript += faces_text(complex) + " rank=" + std::to_string(r) + "\n";
    c.require(complex.dimension() < r, "dim >= rank for\n" + write_matrix(t));
  }
  if (o.pass) o.summary = "dim < rank on " + std::to_string(fixtures_list.size()) + " general-position fixtures";
  return o;
}

Outcome criterion_7(std::size_t threads) {
  Outcome o;
  Check c{o};
  std::size_t subsets = 0;
  for (const IntMatrix& t : fixtures::general_position_fixtures()) {
    c.require(is_general_position(t, threads), "fixture not in general position");
    c.require(free_columns(t).empty(), "free vector in\n" + write_matrix(t));
    const Index n = t.cols();
    const Index k = t.rows() + 2;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const OmegaSet sigma = OmegaSet::from_mask(static_cast<std::size_t>(n), mask);
      if (static_cast<Index>(sigma.size()) != k) continue;
      IntMatrix sub(t.rows(), k);
      for (Index j = 0; j < k; ++j) sub.col(j) = t.col(static_cast<Index>(sigma.members()[j] - 1));
      const bool simple = is_simple(sub);
      o.transcript += sigma.to_string() + (simple ? ":simple " : ":not-simple ");
      c.require(simple, "non-simple subset " + sigma.to_string());
      ++subsets;
    }
    o.transcript += "\n";
  }
  if (o.pass) o.summary = std::to_string(subsets) + " (d+2)-subsets simple; no free vectors";
  return o;
}

Outcome criterion_8(std::size_t threads) {
  Outcome o;
  Check c{o};
  // Qualify (4,6,5) independently of the completion procedure.
  const IntMatrix curve = fixtures::load_fixture("A465.mat");
  const std::vector<IntVec> brute = graver_brute_force(curve, 12);
  const GraverBasis<Integer> brute_basis(curve, brute);
  const auto generators = indispensable_set(brute_basis, threads);
  c.require(generators.size() == 2, "expected two indispensable generators");
  if (!o.pass) return o;
  std::vector<Integer> degrees;
  for (const auto& u : generators.representatives) {
    const IntVec plus = positive_part(u);
    const IntVec minus = negative_part(u);
    degrees.push_back((curve * plus)(0));
    c.require((curve * plus)(0) == (curve * minus)(0), "unbalanced generator");
    o.transcript += "generator " + write_matrix(rows_to_matrix<Integer>({u}, 3)) + "degree " + degrees.back().to_string() + "\n";
  }
  c.require(degrees[0] != degrees[1], "Betti degrees coincide");
  IntMatrix pair(3, 2);
  pair.col(0) = generators.representatives[0];
  pair.col(1) = generators.representatives[1];
  const IntMatrix kernel_hnf = hermite_rows<Integer>(kernel_lattice_basis(curve).basis.transpose());
  c.require(hermite_rows<Integer>(pair.transpose()) == kernel_hnf, "generators do not span the kernel lattice");

  const json r = cli_json({"complex", fixtures::data_path("ci465_m2.mat")}, threads, o.transcript);
  c.require(!r.is_null(), "complex command failed");
  if (!o.pass) return o;
  c.require(r["result"]["maximal_faces"] == json::parse("[[3,6]]"), "complex is 2^{3,6}");
  c.require(r["result"]["dimension"] == 1 && r["result"]["rank"] == 2, "dimension 1 = rank - 1");
  if (o.pass) o.summary = "(4,6,5) has generators of degrees 12 and 10; block complex = 2^{3,6}, dim 1";
  return o;
}

Outcome criterion_9(std::size_t threads) {
  Outcome o;
  Check c{o};
  std::size_t bases = 0;
  std::size_t checked = 0;
  for (const IntMatrix& t : all_simple_fixtures()) {
    const std::size_t s = static_cast<std::size_t>(t.cols());
    if (t.cols() - rank(t) != 2) continue;
    validate_simple_base(t);
    const auto graver = graver_basis(t, GraverOptions{threads});
    ++bases;
    for (std::size_t outside = 1; outside <= s; ++outside) {
      std::vector<std::size_t> members;
      for (std::size_t j = 1; j <= s; ++j) {
        if (j != outside) members.push_back(j);
      }
      const OmegaSet omega(s, members);
      const IntMatrix lifted = lawrence_lift_omega(t, omega);
      c.require(lifted.cols() - rank(lifted) == 2, "lifting changed the codimension");
      const bool face = omega_is_face(graver, omega, threads);
      o.transcript += omega.to_string() + (face ? ":face " : ":non-face ");
      c.require(!face, omega.to_string() + " is a face with one mixed bouquet");
      ++checked;
    }
    o.transcript += "\n";
  }
  c.require(bases > 0, "no codimension-2 fixtures");
  if (o.pass) {
    o.summary = std::to_string(checked) + " one-outside sets on " + std::to_string(bases) +
                " codimension-2 bases are non-faces";
  }
  return o;
}

Outcome criterion_10(std::size_t threads) {
  Outcome o;
  Check c{o};
  std::size_t count = 0;
  for (const IntMatrix& t : all_simple_fixtures()) {
    const auto graver = graver_basis(t, GraverOptions{threads});
    const bool face = omega_is_face(graver, OmegaSet(static_cast<std::size_t>(t.cols()), {}), threads);
    o.transcript += face ? "1" : "0";
    c.require(face, "empty set is not a face of\n" + write_matrix(t));
    ++count;
  }
  if (o.pass) o.summary = "empty set is a face on " + std::to_string(count) + " simple fixtures";
  return o;
}

using Criterion = std::function<Outcome(std::size_t)>;

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                           criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  return list;
}

Outcome guarded(const Criterion& f, std::size_t threads) {
  try {
    return f(threads);
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what(), ""};
  }
}

void print(int index, const Outcome& o, double seconds) {
  std::printf("criterion %2d: %s  %s [%.2f s]\n", index, o.pass ? "PASS" : "FAIL", o.summary.c_str(), seconds);
}

}  // namespace

int main() {
  bool all = true;
  std::vector<std::string> transcripts;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = guarded(criteria()[i], 1);
    print(static_cast<int>(i + 1), o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    transcripts.push_back(o.transcript);
    all = all && o.pass;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome determinism;
  determinism.pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const Outcome again = guarded(criteria()[i], 8);
    if (again.transcript != transcripts[i] && determinism.pass) {
      determinism.pass = false;
      determinism.summary = "criterion " + std::to_string(i + 1) + " differs under --threads 8";
    }
  }
  if (determinism.pass) determinism.summary = "criteria 1-10 byte-identical under 1 and 8 threads";
  print(11, determinism, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  all = all && determinism.pass;

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
