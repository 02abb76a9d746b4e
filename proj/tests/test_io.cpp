#include <catch2/catch_amalgamated.hpp>

#include "revsynth/chromosome.hpp"
#include "revsynth/circuit_io.hpp"

using namespace revsynth;

namespace {

Circuit sample_circuit() {
  return Circuit{3, {make_cnot(1, 3), make_peres(1, 2, 3), Gate{GateKind::PeresNegFirst, {2, 3, 1}},
                     Gate{GateKind::OrPeres, {3, 1, 2}}, make_not(2)}};
}

}  // namespace

TEST_CASE("structured documents round-trip exactly") {
  const Circuit c = sample_circuit();
  const CircuitDocument doc = document_from_circuit(c, "sample", {{"note", "unit test"}});
  const std::string json = document_to_json(doc);
  const CircuitDocument back = document_from_json(json);
  CHECK(back == doc);
  CHECK(circuit_from_document(back) == c);
  CHECK(document_to_json(back) == json);  // render is stable

  GateLibrary lib = GateLibrary::nct_peres_mixed();
  lib.max_toffoli_controls = 3;
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Chromosome chrom = random_chromosome(rng, 9, 5, lib);
    const Circuit circuit{5, chrom.genes};
    const CircuitDocument d = document_from_circuit(circuit);
    CHECK(circuit_from_document(document_from_json(document_to_json(d))) == circuit);
  }
}

TEST_CASE("documents validate on load") {
  CHECK_THROWS_AS(document_from_json("{}"), std::invalid_argument);
  CircuitDocument bad;
  bad.width = 3;
  bad.gates = {{"t2", {1, 1}}};
  CHECK_THROWS_AS(circuit_from_document(bad), std::invalid_argument);
  bad.gates = {{"t2", {1, 2, 3}}};
  CHECK_THROWS_AS(circuit_from_document(bad), std::invalid_argument);
  bad.gates = {{"zz", {1}}};
  CHECK_THROWS_AS(circuit_from_document(bad), std::invalid_argument);
}

TEST_CASE("revlib-like dialect") {
  const CircuitDocument doc = document_from_circuit(sample_circuit(), "sample");
  const std::string text = render_revlib(doc);
  CHECK(text.find(".numvars 3") != std::string::npos);
  CHECK(text.find("t2 x1 x3\n") != std::string::npos);
  CHECK(text.find("p3 x1 x2 x3\n") != std::string::npos);
  CHECK(text.find("p3 -x2 x3 x1\n") != std::string::npos);   // first-negated marker
  CHECK(text.find("op3 x3 x1 x2\n") != std::string::npos);
  CHECK(text.find("t1 x2\n") != std::string::npos);

  const CircuitDocument back = parse_revlib(text);
  CHECK(back.width == 3);
  CHECK(circuit_from_document(back) == sample_circuit());

  const Circuit second_neg{3, {Gate{GateKind::PeresNegSecond, {1, 2, 3}}}};
  const std::string sn = render_revlib(document_from_circuit(second_neg));
  CHECK(sn.find("p3 x1 -x2 x3\n") != std::string::npos);
  CHECK(circuit_from_document(parse_revlib(sn)) == second_neg);

  CHECK_THROWS_AS(parse_revlib(".begin\np3 -x1 -x2 x3\n.end\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_revlib(".begin\nt2 -x1 x2\n.end\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_revlib("t1 x1\n"), std::invalid_argument);  // body before .begin
}

TEST_CASE("auto-detecting loader") {
  const CircuitDocument doc = document_from_circuit(sample_circuit(), "either");
  CHECK(circuit_from_document(parse_circuit_document(document_to_json(doc))) == sample_circuit());
  CHECK(circuit_from_document(parse_circuit_document(render_revlib(doc))) == sample_circuit());
}

TEST_CASE("wire diagram") {
  const Circuit c{3, {make_cnot(1, 3), make_peres(1, 2, 3)}};
  const std::string art = render_ascii(c);
  CHECK(art ==
        "     t2  p3\n"
        "x1 ──●───●───\n"
        "x2 ──┼───⊕───\n"
        "x3 ──⊕───◉───\n");

  const std::string empty = render_ascii(Circuit{2, {}});
  CHECK(empty ==
        "     \n"
        "x1 ────\n"
        "x2 ────\n");

  // negated product input is hollow
  const std::string nf = render_ascii(Circuit{3, {Gate{GateKind::PeresNegFirst, {1, 2, 3}}}});
  CHECK(nf.find("○") != std::string::npos);
}
