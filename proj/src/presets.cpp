#include "widthlab/presets.hpp"

namespace widthlab {

const std::vector<Preset>& word_presets() {
  static const std::vector<Preset> presets = {
      {"unknot", false, "link\ncup 0\ncap 0\n", 2,
       "one-bridge unknot, the minimum width of any link"},
      {"unlink-nested", false, "link\ncup 0\ncup 1\ncap 1\ncap 0\n", 8,
       "two-component unlink with concentric circles; rigid under "
       "exchanges"},
      {"unlink-split", false, "link\ncup 0\ncap 0\ncup 0\ncap 0\n", 4,
       "two-component unlink stacked with a width-0 level between"},
      {"trefoil-plat", false,
       "link\ncup 0\ncup 2\nx+ 1\nx+ 1\nx+ 1\ncap 1\ncap 0\n", 8,
       "trefoil as a 4-strand plat; already locally thin"},
      {"figure-eight-plat", false,
       "link\ncup 0\ncup 2\nx+ 1\nx- 2\nx+ 1\nx- 2\ncap 1\ncap 0\n", 8,
       "figure-eight knot as a 4-strand plat"},
      {"stacked-14", false,
       "link\ncup 0\ncup 2\ncap 1\ncup 1\ncap 1\ncap 0\n", 14,
       "width-14 fixture with one interior thin level and two braid "
       "boxes"},
  };
  return presets;
}

const std::vector<Preset>& schematic_presets() {
  static const std::vector<Preset> presets = {
      {"cdisk-clean", true,
       "cdisk compress\n"
       "base alpha=2 beta=4\n"
       "inside=alpha\n"
       "min beta\nmax beta\nmax beta\n"
       "min alpha\nmax alpha\nmax alpha\n"
       "min beta\nmax beta\nmax beta\n",
       42, "compressing disk whose regions all satisfy the strict count "
           "inequalities"},
      {"cdisk-fact1-violation", true,
       "cdisk compress\n"
       "base alpha=0 beta=2\n"
       "inside=beta\n"
       "min alpha\nmax alpha\n"
       "min beta\nmax beta\nmax beta\n",
       14, "a beta region with two maxima over one minimum above a "
           "balanced alpha region; pushing it down loses width 4"},
      {"cdisk-fact4-case", true,
       "cdisk cut\n"
       "base alpha=1 beta=1\n"
       "inside=alpha\n"
       "min beta\ntransfer\n"
       "min alpha\nmax alpha\nmax alpha tau\n"
       "max beta\n",
       18, "cut-disk with the connecting strand's first maximum in region "
           "r; the pipe-then-push move loses width 4"},
  };
  return presets;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : word_presets())
    if (p.name == name) return &p;
  for (const auto& p : schematic_presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace widthlab
