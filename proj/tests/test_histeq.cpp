#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "contrast/histeq.hpp"
#include "contrast/metrics.hpp"
#include "contrast/synth.hpp"
#include "histeq_oracle.hpp"
#include "test_support.hpp"

using namespace contrast;
using contrast::testing::from_pixels;

namespace {

const GrayImage kFour = from_pixels(2, 2, {0, 64, 128, 255});

}  // namespace

TEST(HeLut, FourLevelExample) {
  auto lut = he_lut(histogram(kFour));
  EXPECT_EQ(lut.method, LutMethod::HE);
  EXPECT_EQ(lut[0], 64);    // 63.75
  EXPECT_EQ(lut[64], 128);  // 127.5 rounds away from zero
  EXPECT_EQ(lut[128], 191); // 191.25
  EXPECT_EQ(lut[255], 255);
}

TEST(HeLut, ConstantImageMapsToTop) {
  for (int g : {0, 7, 128, 255}) {
    auto lut = he_lut(histogram(GrayImage(4, 4, static_cast<Pixel>(g))));
    EXPECT_EQ(lut[g], 255) << g;
  }
}

TEST(HeLut, EmptyHistogramThrows) { EXPECT_THROW(he_lut(Histogram{}), std::invalid_argument); }

TEST(HeLut, MatchesPrefixSumOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto img = contrast::testing::random_image(rng, 16, 16, 0, 255);
    auto h = histogram(img);
    auto lut = he_lut(h);
    std::uint64_t cum = 0;
    for (int k = 0; k < kLevels; ++k) {
      cum += h.count(k);
      const double s = std::round(255.0 * static_cast<double>(cum) / h.total());
      ASSERT_EQ(lut[k], static_cast<int>(s)) << "level " << k;
    }
  }
}

TEST(HeLut, MonotoneAndTopOccupiedLevelIs255) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = histogram(contrast::testing::random_palette_image(rng));
    auto lut = he_lut(h);
    for (int k = 0; k + 1 < kLevels; ++k) ASSERT_LE(lut[k], lut[k + 1]);
    EXPECT_EQ(lut[h.max_level()], 255);
    const int lo = h.min_level();
    EXPECT_NEAR(lut[lo], 255.0 * h.probability(lo), 0.5);
  }
}

TEST(ApplyLut, IdentityAndConstant) {
  std::mt19937_64 rng(33);
  auto img = contrast::testing::random_image(rng);
  EXPECT_EQ(apply_lut(img, IntensityLut::identity()), img);
  IntensityLut zero;
  zero.map.fill(0);
  auto out = apply_lut(img, zero);
  EXPECT_TRUE(std::all_of(out.pixels().begin(), out.pixels().end(), [](Pixel p) { return p == 0; }));
  EXPECT_TRUE(out.same_shape(img));
}

TEST(Equalize, Examples) {
  EXPECT_EQ(equalize(kFour), from_pixels(2, 2, {64, 128, 191, 255}));
  EXPECT_EQ(equalize(GrayImage(3, 3, 40)), GrayImage(3, 3, 255));
}

TEST(Equalize, IsLutExpressible) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto img = contrast::testing::random_image(rng);
    ASSERT_EQ(equalize(img), apply_lut(img, he_lut(histogram(img))));
  }
}

// Every image with <= 16 pixels over a 4-level palette is determined (up to
// pixel order, which equalization ignores) by its level counts, so
// enumerating all count vectors covers the space exhaustively.
TEST(Equalize, ExhaustiveSmallImagesMatchReference) {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> level(0, 255);
  for (int palette_trial = 0; palette_trial < 8; ++palette_trial) {
    std::array<Pixel, 4> palette{};
    for (auto& p : palette) p = static_cast<Pixel>(level(rng));
    for (int n = 1; n <= 16; ++n) {
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (int c = 0; a + b + c <= n; ++c) {
            const int d = n - a - b - c;
            std::vector<Pixel> px;
            px.insert(px.end(), a, palette[0]);
            px.insert(px.end(), b, palette[1]);
            px.insert(px.end(), c, palette[2]);
            px.insert(px.end(), d, palette[3]);
            std::shuffle(px.begin(), px.end(), rng);
            GrayImage img(px.size(), 1, px);
            ASSERT_EQ(equalize(img), oracle::equalize_reference(img));
          }
    }
  }
}

TEST(Equalize, OutputCdfTracksLinearRamp) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    auto img = contrast::testing::random_palette_image(rng, 16, 40);
    auto in = histogram(img);
    auto out = histogram(equalize(img));
    ASSERT_EQ(out.total(), in.total());
    double max_bin = 0.0;
    for (int k = 0; k < kLevels; ++k) max_bin = std::max(max_bin, in.probability(k));
    // Half a level of rounding slack on top of the largest bin.
    const double bound = std::max(max_bin, 0.5 / 255.0) + 1e-12;
    auto cdf = out.cdf();
    for (int x = 0; x < kLevels; ++x) {
      ASSERT_LE(std::abs(cdf[x] - x / 255.0), bound) << "level " << x;
    }
  }
}

TEST(BiEqualize, MatchesReferenceForEveryThreshold) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto img = contrast::testing::random_image(rng, 8);
    auto h = histogram(img);
    for (int t = 0; t < kLevels; ++t) {
      ASSERT_EQ(apply_lut(img, bi_equalize_lut(h, t)), oracle::bi_equalize_reference(img, t))
          << "threshold " << t;
    }
  }
}

TEST(BiEqualize, RejectsThresholdOutOfRange) {
  auto h = histogram(kFour);
  EXPECT_THROW(bi_equalize_lut(h, -1), std::invalid_argument);
  EXPECT_THROW(bi_equalize_lut(h, 256), std::invalid_argument);
}

TEST(BiEqualize, SegmentsAreMonotoneAndDisjoint) {
  std::mt19937_64 rng(38);
  std::uniform_int_distribution<int> thr(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = histogram(contrast::testing::random_palette_image(rng, 16, 30));
    const int t = thr(rng);
    auto lut = bi_equalize_lut(h, t);
    for (int k = 0; k < kLevels; ++k) {
      if (k <= t) ASSERT_LE(lut[k], t);
      else ASSERT_GT(lut[k], t);
      if (k + 1 < kLevels && k != t) ASSERT_LE(lut[k], lut[k + 1]);
    }
  }
}

TEST(Bbhe, FourLevelExample) {
  EXPECT_EQ(bbhe_threshold(histogram(kFour)), 111);
  EXPECT_EQ(bbhe(kFour), from_pixels(2, 2, {56, 111, 184, 255}));
}

TEST(Bbhe, ConstantImageUnchanged) {
  for (int g : {0, 1, 100, 254, 255}) {
    GrayImage img(5, 4, static_cast<Pixel>(g));
    EXPECT_EQ(bbhe(img), img) << g;
  }
}

TEST(Bbhe, PreservesBrightnessBetterThanHeOnMostLowContrastImages) {
  int better = 0;
  const int corpus = 100;
  for (int i = 0; i < corpus; ++i) {
    // Narrow ranges placed off-centre so plain HE shifts the mean.
    const int lo = 20 + (i * 7) % 150;
    auto img = synth_uniform(32, 32, lo, lo + 40, 1000 + i);
    if (ambe(img, bbhe(img)) <= ambe(img, equalize(img))) ++better;
  }
  EXPECT_GT(better, corpus / 2) << better << " of " << corpus;
}

TEST(Mmbebhe, ConstantImageUnchanged) {
  for (int g : {0, 9, 128, 255}) {
    GrayImage img(3, 3, static_cast<Pixel>(g));
    EXPECT_EQ(mmbebhe(img), img) << g;
  }
}

TEST(Mmbebhe, DominatesBbheAndMatchesBruteForce) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 40; ++trial) {
    auto img = contrast::testing::random_image(rng, 8, 8, 0, 255);
    auto h = histogram(img);
    EXPECT_EQ(mmbebhe_threshold(h), oracle::mmbebhe_threshold_bruteforce(img));
    EXPECT_LE(ambe(img, mmbebhe(img)), ambe(img, bbhe(img)));
  }
}

TEST(Mmbebhe, MappedSumMatchesImagePass) {
  std::mt19937_64 rng(40);
  auto img = contrast::testing::random_image(rng);
  auto h = histogram(img);
  auto lut = bi_equalize_lut(h, 77);
  EXPECT_EQ(mapped_sum(h, lut), intensity_sum(apply_lut(img, lut)));
}

TEST(AllMethods, PreservePixelCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto img = contrast::testing::random_image(rng);
    for (const auto& out : {equalize(img), bbhe(img), mmbebhe(img)}) {
      ASSERT_TRUE(out.same_shape(img));
      ASSERT_EQ(histogram(out).total(), img.size());
    }
  }
}
