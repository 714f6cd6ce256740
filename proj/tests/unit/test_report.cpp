#include <doctest.h>

#include "cmfam/io/errors.hpp"
#include "cmfam/report/report.hpp"
#include "fixtures.hpp"

using namespace cmfam;
using namespace cmfam::report;

namespace {

Options test_options() {
  Options o;
  o.bundles = fixtures::data_dir() / "bundles";
  o.sample_points = 5;
  return o;
}

const std::vector<Record> &g4_records() {
  static const auto recs = [] {
    const auto o = test_options();
    return build_records(analyze("G4", o), o);
  }();
  return recs;
}

} // namespace

TEST_CASE("record lines round trip") {
  Record r("evidence");
  r.set("text", "a b%c\td\ne").set("group", "G4").set("eq", "x=y");
  const std::string line = to_line(r);
  CHECK(line == "evidence eq=x=y group=G4 text=a%20b%25c%09d%0Ae");
  CHECK(parse_line(line, "here") == r);
}

TEST_CASE("malformed record lines") {
  CHECK_THROWS_AS(parse_line("", "x"), io::ParseError);
  CHECK_THROWS_AS(parse_line("family members", "x"), io::ParseError);
  CHECK_THROWS_AS(parse_line("family a=1 a=2", "x"), io::ParseError);
  CHECK_THROWS_AS(parse_line("family a=%zz", "x"), io::ParseError);
  const auto recs = parse_records("# header\n\ncm group=G4\r\nvariety group=G4 planes=6\n", "f");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].first == 3);
  CHECK(recs[1].first == 4);
  CHECK(recs[1].second.at("planes") == "6");
}

TEST_CASE("machine report round trips losslessly") {
  const auto &recs = g4_records();
  const std::string text = render_machine(recs);
  std::vector<Record> back;
  for (const auto &[line, r] : parse_records(text, "report"))
    back.push_back(r);
  CHECK(back == recs);
}

TEST_CASE("machine report for G4") {
  const auto &recs = g4_records();
  auto find = [&](const std::string &type) {
    return std::find_if(recs.begin(), recs.end(), [&](const Record &r) { return r.type == type; });
  };
  REQUIRE(find("group") != recs.end());
  CHECK(find("group")->at("order") == "24");
  CHECK(find("variety")->at("planes") == "6");
  CHECK(find("cm")->at("status") == "certified");
  CHECK(find("martino")->at("generic_equal") == "true");
  CHECK(find("sampling")->at("agrees") == "true");
}

TEST_CASE("reports do not depend on the job count") {
  auto o = test_options();
  const auto one = render_machine(build_records(analyze("G6", o), o));
  o.jobs = 4;
  CHECK(render_machine(build_records(analyze("G6", o), o)) == one);
}

TEST_CASE("golden comparison pinpoints the first divergence") {
  const auto &recs = g4_records();
  const std::string golden = "# golden\n"
                             "group group=G4 order=24\n"
                             "character group=G4 label=phi{1,0} omega=12*k[1,0]-12*k[1,1]\n";
  const auto ok = diff_golden_text(recs, golden, "g.golden");
  CHECK(ok.pass);
  CHECK(ok.compared == 2);

  const std::string altered = "# golden\n"
                              "group group=G4 order=24\n"
                              "character group=G4 label=phi{1,0} omega=12*k[1,0]-13*k[1,1]\n";
  const auto bad = diff_golden_text(recs, altered, "g.golden");
  CHECK_FALSE(bad.pass);
  CHECK(bad.line == 3);
  CHECK(bad.message.find("omega") != std::string::npos);

  const auto missing = diff_golden_text(recs, "character group=G4 label=phi{7,7} omega=0\n", "g.golden");
  CHECK_FALSE(missing.pass);
  CHECK(missing.line == 1);
}

TEST_CASE("missing bundles and goldens are reported as such") {
  const auto o = test_options();
  CHECK_THROWS_AS(analyze("NoSuchGroup", o), io::MissingInputError);
  CHECK_THROWS_AS(diff_golden(g4_records(), fixtures::data_dir() / "golden" / "NoSuchGroup"),
                  io::MissingInputError);
  const auto groups = available_groups(o.bundles);
  CHECK(groups.size() == 10);
  CHECK(std::is_sorted(groups.begin(), groups.end()));
}

TEST_CASE("S6 has no martino verdict") {
  const auto o = test_options();
  const auto a = analyze("S6", o);
  CHECK(refused(a));
  const auto recs = build_records(a, o);
  const auto m = std::find_if(recs.begin(), recs.end(), [](const Record &r) { return r.type == "martino"; });
  REQUIRE(m != recs.end());
  CHECK(m->at("status") == "unavailable");
}
