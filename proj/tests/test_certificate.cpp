#include <gtest/gtest.h>

#include <sstream>

#include "gks/certificate.hpp"
#include "gks/errors.hpp"
#include "gks/hypercube.hpp"
#include "gks/minimal_search.hpp"
#include "gks/solver.hpp"

using namespace gks;

TEST(Certificate, GeneratedCertificateIsAccepted) {
  auto cert = no_2_5_certificate();
  ASSERT_EQ(cert.minimal_2_4_classes.size(), 1u);
  EXPECT_TRUE(cert.all_are_8_cycles);
  EXPECT_TRUE(cert.all_span_4_directions);
  EXPECT_EQ(cert.counting.to_string(), "5*8 = 40 > 32");
  EXPECT_TRUE(cert.counting.holds());
  auto check = validate_certificate(cert);
  EXPECT_TRUE(check.accepted);
  EXPECT_TRUE(check.problems.empty());
}

TEST(Certificate, AgreesWithDirectSearch) {
  EXPECT_TRUE(minimal_winning_subgraphs(5, 2).empty());
  EXPECT_FALSE(is_winning(HypercubeSubgraph(5, {})));
}

TEST(Certificate, RejectsTampering) {
  auto cert = no_2_5_certificate();

  auto two_classes = cert;
  two_classes.minimal_2_4_classes.push_back(parse_star_edges("*000,0*00,10*0,01*0,101*,011*,*011,1*11"));
  EXPECT_FALSE(validate_certificate(two_classes, false).accepted);

  auto bad_count = cert;
  bad_count.counting.cube_vertices = 64;
  EXPECT_FALSE(validate_certificate(bad_count, false).accepted);

  auto bad_flag = cert;
  bad_flag.all_span_4_directions = false;
  EXPECT_FALSE(validate_certificate(bad_flag, false).accepted);

  auto not_minimal = cert;
  not_minimal.minimal_2_4_classes[0] = not_minimal.minimal_2_4_classes[0].with(parse_star_token("111*"));
  EXPECT_FALSE(validate_certificate(not_minimal, false).accepted);

  auto path = cert;
  path.minimal_2_4_classes[0] = path.minimal_2_4_classes[0].without(path.minimal_2_4_classes[0].edges()[0]);
  EXPECT_FALSE(validate_certificate(path, false).accepted);

  EXPECT_FALSE(validate_certificate(No25Certificate{}, false).accepted);
}

TEST(Certificate, FormatParseRoundTrip) {
  auto cert = no_2_5_certificate();
  const auto text = format_certificate(cert);
  EXPECT_NE(text.find("5*8 = 40 > 32"), std::string::npos);
  std::istringstream in(text);
  auto back = parse_certificate(in);
  EXPECT_EQ(back.minimal_2_4_classes, cert.minimal_2_4_classes);
  EXPECT_EQ(back.all_are_8_cycles, cert.all_are_8_cycles);
  EXPECT_EQ(back.all_span_4_directions, cert.all_span_4_directions);
  EXPECT_EQ(back.counting.cycles, 5);
  EXPECT_TRUE(validate_certificate(back).accepted);
  EXPECT_EQ(format_certificate(back), text);

  std::istringstream garbage("[machine]\ncycles=x\n");
  EXPECT_THROW(parse_certificate(garbage), ParseError);
}
