#include "trilap/corpus.hpp"

namespace trilap {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::vector<CorpusFunction> make_corpus() {
  std::vector<CorpusFunction> list;

  CorpusFunction u13;
  u13.id = "u13";
  u13.domain = TriangleKind::Hemiequilateral;
  u13.families = {Family::EquiAntisym};
  u13.boundary_compatible = true;
  u13.band = 3;
  u13.f = [](const Point2& p) { return eval_closed(EigenIndex{Family::EquiAntisym, 1, 3}, p); };
  list.push_back(std::move(u13));

  CorpusFunction v02;
  v02.id = "v02";
  v02.domain = TriangleKind::Hemiequilateral;
  v02.families = {Family::EquiSym};
  v02.boundary_compatible = true;
  v02.band = 2;
  v02.f = [](const Point2& p) { return eval_closed(EigenIndex{Family::EquiSym, 0, 2}, p); };
  list.push_back(std::move(v02));

  CorpusFunction bump_square;
  bump_square.id = "bump-square";
  bump_square.domain = TriangleKind::Isosceles45;
  bump_square.families = {Family::SquareAntisym};
  bump_square.boundary_compatible = true;
  bump_square.f = [](const Point2& p) { return p.x() * p.y() * (1.0 - p.x() - p.y()); };
  list.push_back(std::move(bump_square));

  CorpusFunction bump_equi;
  bump_equi.id = "bump-equilateral";
  bump_equi.domain = TriangleKind::Equilateral;
  bump_equi.families = {Family::EquiAntisym, Family::EquiSym};
  bump_equi.boundary_compatible = true;
  bump_equi.f = [](const Point2& p) {
    return p.y() * (1.0 - kSqrt3 * p.x() - p.y()) * (1.0 + kSqrt3 * p.x() - p.y());
  };
  list.push_back(std::move(bump_equi));

  CorpusFunction bump_odd;
  bump_odd.id = "bump-odd";
  bump_odd.domain = TriangleKind::Equilateral;
  bump_odd.families = {Family::EquiAntisym, Family::EquiSym};
  bump_odd.boundary_compatible = true;
  bump_odd.f = [](const Point2& p) {
    return p.x() * p.y() * (1.0 - kSqrt3 * p.x() - p.y()) * (1.0 + kSqrt3 * p.x() - p.y());
  };
  list.push_back(std::move(bump_odd));

  CorpusFunction one_square;
  one_square.id = "one-square";
  one_square.domain = TriangleKind::Isosceles45;
  one_square.families = {Family::SquareAntisym};
  one_square.boundary_compatible = false;
  one_square.f = [](const Point2&) { return 1.0; };
  list.push_back(std::move(one_square));

  CorpusFunction one_equi;
  one_equi.id = "one-equilateral";
  one_equi.domain = TriangleKind::Equilateral;
  one_equi.families = {Family::EquiAntisym, Family::EquiSym};
  one_equi.boundary_compatible = false;
  one_equi.f = [](const Point2&) { return 1.0; };
  list.push_back(std::move(one_equi));

  return list;
}

}  // namespace

const std::vector<CorpusFunction>& corpus() {
  static const std::vector<CorpusFunction> list = make_corpus();
  return list;
}

const CorpusFunction* find_corpus(std::string_view id) {
  for (const CorpusFunction& cf : corpus())
    if (cf.id == id) return &cf;
  return nullptr;
}

}  // namespace trilap
