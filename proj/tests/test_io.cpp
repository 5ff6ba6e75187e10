#include "doctest.h"

#include <fstream>
#include <sstream>

#include "covlab/covering.hpp"
#include "covlab/extension.hpp"
#include "covlab/io.hpp"
#include "covlab/model_fixtures.hpp"

using namespace covlab;
using fingroup::cyclic;

namespace {

std::string sample_text() {
  std::ifstream in(COVLAB_TEST_DATA "/sample.json");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Error capture(const std::string& text) {
  try {
    io::parse_document(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorKind::SchemaError, "");
}

}  // namespace

TEST_CASE("sample document loads") {
  auto doc = io::parse_document(sample_text());
  CHECK(doc.digest == io::fnv1a_hex(sample_text()));
  CHECK(doc.groups.at("C2").original_identity == 1);
  CHECK(doc.groups.at("C2").table == cyclic(2));
  CHECK(doc.groups.at("V").table == fingroup::klein_four());

  const auto& z4 = doc.cochains.at("z4");
  CHECK(z4.xi == std::vector<int>{0, 0, 0, 1});
  CHECK(cohomology::validate_cocycle(z4, true).valid);
  CHECK(fingroup::find_isomorphism(extension::build_extension(z4).E, cyclic(4)));
  CHECK(cohomology::validate_cocycle(doc.cochains.at("semidirect"), true).valid);
  auto broken = cohomology::validate_cocycle(doc.cochains.at("broken"));
  CHECK_FALSE(broken.valid);

  CHECK(doc.reps.at("sign")(1) == linalg::Matrix::scalar(1, -1));
  CHECK(doc.reps.at("spinor").matrices == covering::q8_spinor().matrices);
  CHECK(multiplet::verify_rep(doc.reps.at("rotation")).ok);

  auto q = doc.covers.at("q8");
  CHECK(q.K.embedding == std::vector<int>{0, 1});
  CHECK(doc.sections.at("ijk").section.lift == std::vector<int>{0, 2, 4, 6});
  CHECK(doc.sections.at("builtin").cover == "Z4->Z2");
}

TEST_CASE("loaded model matches the shipped swap fixture") {
  auto doc = io::parse_document(sample_text());
  auto fixture = fixtures::swap_model();
  const auto& m = doc.models.at("swap");
  CHECK(m.functor.objects == fixture.model.functor.objects);
  CHECK(m.functor.morphisms == fixture.model.functor.morphisms);
  CHECK(m.action.objects == fixture.model.action.objects);
  CHECK(m.action.morphisms == fixture.model.action.morphisms);
  CHECK(doc.implementations.at("plain").impl.eta == fixture.impl.eta);
  CHECK(doc.implementations.at("flipped").impl.eta == fixture.alternative->eta);
  CHECK(covariance::validate_implementation(m, doc.implementations.at("flipped").impl).ok);
}

TEST_CASE("loaded field actions") {
  auto doc = io::parse_document(sample_text());
  for (const auto& [id, a] : doc.field_actions) {
    CAPTURE(id);
    CHECK(multiplet::verify_field_action(a).ok);
  }
  const auto& a = doc.field_actions.at("mixing");
  auto e = extension::build_extension(a.cocycle);
  auto rho = multiplet::build_rho(a, e);
  auto report = multiplet::detect_mixing(rho, e, doc.submultiplets.at("first"), doc.submultiplets.at("second"));
  CHECK(report.witness == 2);
}

TEST_CASE("parse errors are located") {
  auto e = capture("{\n  \"groups\": {\n    \"A\": [1, 2\n");
  CHECK(e.kind() == ErrorKind::ParseError);
  REQUIRE(e.witness().size() == 2);
  CHECK(e.witness()[0] == 4);
  auto mid = capture("{\"groups\": {\"x\": [1,,2]}}");
  CHECK(mid.kind() == ErrorKind::ParseError);
  CHECK(mid.witness() == std::vector<int>{1, 21});
}

TEST_CASE("schema errors name the field") {
  auto e = capture(R"({"cochains": {"c": {"G": "Z2", "A": "G7", "xi": [[0, 0], [0, 0]]}}})");
  CHECK(e.kind() == ErrorKind::SchemaError);
  CHECK(e.detail() == "A");
  CHECK(capture(R"({"cochains": {"c": {"G": "Z2", "A": "Z2"}}})").detail() == "xi");
  CHECK(capture(R"({"cochains": {"c": {"G": "Z2", "A": "Z2", "xi": [[0, 5], [0, 0]]}}})").detail() == "xi");
  CHECK(capture(R"({"reps": {"r": {"group": "Z2", "dim": 1, "matrices": [[1]]}}})").detail() == "matrices");
  CHECK(capture(R"({"reps": {"r": {"group": "Z2", "dim": 1, "matrices": [[1], [[1, 0]]]}}})").detail() == "matrices");
  CHECK(capture(R"({"groups": {"g": {"order": 3, "table": [[0, 1], [1, 0]]}}})").detail() == "order");
  CHECK(capture(R"([1, 2])").detail() == "document");
  CHECK(capture(R"({"sections": {"s": {"cover": "nope", "lift": [0]}}})").detail() == "cover");
}

TEST_CASE("module validation errors pass through") {
  CHECK(capture(R"({"groups": {"g": {"table": [[0, 1], [1, 1]]}}})").kind() == ErrorKind::NotInvertible);
  CHECK(capture(R"({"cochains": {"c": {"G": "Z2", "A": "Z3", "xi": [[0, 0], [0, 0]], "phi": [[0, 1, 2], [0, 0, 0]]}}})")
            .kind() == ErrorKind::InvalidCocycle);
  CHECK(capture(R"({"covers": {"c": {"S": "S3", "L": "Z2", "pi": [0, 1, 1, 0, 0, 1]}}})").kind() ==
        ErrorKind::NotCentral);
}

TEST_CASE("json writers round-trip through the readers") {
  auto rep = covering::q8_spinor();
  io::json doc = {{"reps", {{"r", io::rep_json(rep)}}}};
  doc["reps"]["r"]["group"] = "Q8";
  auto back = io::parse_document(doc.dump());
  CHECK(back.reps.at("r").matrices == rep.matrices);

  auto c = fixtures::z4_rotation();
  auto gauge = covariance::compute_gauge_group(c.model.functor);
  auto coc = covariance::extract_cocycle(c.model, c.impl, gauge);
  io::json cj = io::cochain_json(coc);
  cj["G"] = "Z2";
  cj["A"] = "Z4";
  auto loaded = io::parse_document(io::json{{"cochains", {{"c", cj}}}}.dump());
  CHECK(loaded.cochains.at("c").xi == coc.xi);
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
