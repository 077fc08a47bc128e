#include <gtest/gtest.h>

#include "shallow/bounds.hpp"
#include "shallow/serialize.hpp"

using namespace shallow;

namespace {

std::string value(const BoundTable& t, const std::string& name) {
  for (const auto& [n, v] : t)
    if (n == name) return v.str();
  return "missing";
}

}  // namespace

TEST(Bounds, FanPlanarConstants) {
  BoundTable t = bound_catalog("fan-planar");
  EXPECT_EQ(value(t, "rtw"), "1619");
  EXPECT_EQ(value(t, "ltw"), "45");
  EXPECT_EQ(value(t, "K"), "81");
  EXPECT_EQ(value(t, "tw"), "19");
}

TEST(Bounds, EngineBagConstant) {
  BoundTable t = bound_catalog("engine", {{"r", 1}, {"t", 3}, {"ell", 1}, {"kdeg", 2}});
  EXPECT_EQ(value(t, "bag"), "20");
  EXPECT_EQ(value(t, "tw"), "19");
  EXPECT_EQ(value(t, "width"), "3");
}

TEST(Bounds, KPlanarInstance) {
  EXPECT_EQ(value(bound_catalog("gk-planar", {{"g", 0}, {"k", 1}}), "rtw"), "239");
}

TEST(Bounds, ShortcutGapWithUnitShortcuts) {
  for (long long d = 1; d <= 6; ++d)
    EXPECT_EQ(value(bound_catalog("shortcut-gap", {{"k", 1}, {"d", d}}), "gap"), std::to_string(2 * d));
  EXPECT_EQ(value(bound_catalog("shortcut-gap", {{"k", 2}, {"d", 2}}), "gap"), "5");
}

TEST(Bounds, StrictCliqueLayout) {
  for (long long ell = 1; ell <= 6; ++ell)
    EXPECT_EQ(value(bound_catalog("strict-clique-layout", {{"ell", ell}}), "sqn"), std::to_string(ell - 1));
}

TEST(Bounds, GpstAndProductTreewidth) {
  EXPECT_EQ(value(bound_catalog("gpst-shallow", {{"r", 1}, {"t", 1}, {"ell", 1}}), "rtw"), "35");
  EXPECT_EQ(value(bound_catalog("product-treewidth", {{"t", 1}, {"n", 2}}), "tw"), "3");
  EXPECT_EQ(value(bound_catalog("queue-shallow", {{"r", 1}, {"q", 1}}), "qn"), "8");
}

TEST(Bounds, BigValuesSerialiseExactly) {
  BoundTable t = bound_catalog("nonrepetitive", {{"ell", 81}, {"t", 19}});
  EXPECT_EQ(value(t, "pi"), "89060441849856");
  BoundTable huge = bound_catalog("queue-shallow", {{"r", 3}, {"q", 1000}});
  EXPECT_TRUE(json::to_json(huge)["qn"].is_string());
}

TEST(Bounds, ErrorsOnUnknownClassOrMissingParameter) {
  EXPECT_THROW(bound_catalog("no-such-class"), InputError);
  EXPECT_THROW(bound_catalog("engine", {{"r", 1}}), InputError);
  for (const auto& cls : bound_classes()) EXPECT_FALSE(cls.empty());
}
