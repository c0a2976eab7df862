/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The edgeldpc Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "edgeldpc/codec/backend.hpp"
#include "edgeldpc/codec/check_node.hpp"
#include "edgeldpc/codec/decoder.hpp"
#include "edgeldpc/codec/encoder.hpp"
#include "edgeldpc/codec/llr.hpp"
#include "edgeldpc/codec/rate_match.hpp"
#include "edgeldpc/common/error.hpp"
#include "edgeldpc/construction/code_config.hpp"
#include "test_support.hpp"

// NOLINTBEGIN(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)

namespace {

using namespace edgeldpc::codec;
using namespace edgeldpc::construction;
using edgeldpc::test::random_bits;

const CodeInstance& k512_code() {
    static const CodeInstance code = make_code(512, 1024, edgeldpc::test::data_dir());
    return code;
}

struct ToyCode {
    CodeConfig cfg;
    ParityCheckMatrix h;
};

// H = [[1,0,0,1],[0,1,1,0]]: info bits 0..1, parity bits 2..3, nothing punctured.
ToyCode toy_code() {
    BaseGraph bg;
    bg.rows = 1;
    bg.cols = 2;
    bg.info_cols = 1;
    bg.entries = {{0, 0, {0}}, {0, 1, {1}}};
    CodeConfig cfg;
    cfg.k_info = 2;
    cfg.n_coded = 4;
    cfg.bg_id = BaseGraphId::custom;
    cfg.lifting = {2, 0};
    cfg.info_cols = 1;
    cfg.cols = 2;
    cfg.k_lifted = 2;
    cfg.num_filler = 0;
    cfg.punctured_cols = 0;
    return {cfg, expand(bg, cfg.lifting)};
}

// LLRs for E rate-matched bits: BPSK-style mean +-mu plus Gaussian noise.
std::vector<float> noisy_llrs(const std::vector<std::uint8_t>& bits, float mu, float sigma,
                              std::mt19937_64& rng) {
    std::normal_distribution<float> n(0.0F, sigma);
    std::vector<float> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[i] = (bits[i] != 0 ? -mu : mu) + n(rng);
    }
    return out;
}

struct Batch {
    std::vector<std::uint8_t> info;
    std::vector<float> llrs;
    std::size_t rows = 0;
    SoftMatrixView view() const { return {llrs, rows, llrs.size() / rows}; }
};

Batch make_batch(std::size_t n, float mu, float sigma, std::uint64_t seed) {
    const auto& code = k512_code();
    const Encoder enc(code);
    const RateMatcher rm(code.config);
    std::mt19937_64 rng(seed);
    Batch b;
    b.rows = n;
    for (std::size_t i = 0; i < n; ++i) {
        auto info = random_bits(code.config.k_info, rng);
        const auto tx = rm.match(enc.encode(info));
        auto l = sigma > 0.0F ? noisy_llrs(tx.bits, mu, sigma, rng)
                              : noisy_llrs(tx.bits, mu, 0.0F, rng);
        b.info.insert(b.info.end(), info.begin(), info.end());
        b.llrs.insert(b.llrs.end(), l.begin(), l.end());
    }
    return b;
}

double oracle_sum_product(const std::vector<double>& in, std::size_t j) {
    double p = 1.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (i != j) {
            p *= std::tanh(std::clamp(in[i], -30.0, 30.0) / 2.0);
        }
    }
    p = std::clamp(p, -1.0 + 1e-15, 1.0 - 1e-15);
    return std::clamp(2.0 * std::atanh(p), -30.0, 30.0);
}

TEST(Encoder, ToyCodeByHand) {
    const auto toy = toy_code();
    const Encoder enc(toy.h, 1, 2, 2);
    EXPECT_EQ(enc.encode(std::vector<std::uint8_t>{1, 0}).bits,
              (std::vector<std::uint8_t>{1, 0, 0, 1}));
    EXPECT_EQ(enc.encode(std::vector<std::uint8_t>{0, 1}).bits,
              (std::vector<std::uint8_t>{0, 1, 1, 0}));
}

TEST(Encoder, AllZeroInfoGivesAllZeroCodeword) {
    const Encoder enc(k512_code());
    const auto cw = enc.encode(std::vector<std::uint8_t>(512, 0));
    EXPECT_TRUE(std::all_of(cw.bits.begin(), cw.bits.end(), [](auto b) { return b == 0; }));
}

TEST(Encoder, RandomMessagesSatisfyParityAndKeepFillersZero) {
    const auto& code = k512_code();
    const Encoder enc(code);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto info = random_bits(512, rng);
        const auto cw = enc.encode(info);
        ASSERT_EQ(cw.bits.size(), 2704U);
        ASSERT_TRUE(code.h.satisfied_by(cw.bits)) << "message " << t;
        ASSERT_TRUE(std::equal(info.begin(), info.end(), cw.bits.begin()));
        for (std::size_t p = 512; p < 520; ++p) {
            ASSERT_EQ(cw.bits[p], 0);
        }
    }
}

TEST(Encoder, Bg1CodeSatisfiesParity) {
    const auto code = make_code(8448, 10000, edgeldpc::test::data_dir());
    ASSERT_EQ(code.config.bg_id, BaseGraphId::bg1);
    const Encoder enc(code);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 5; ++t) {
        ASSERT_TRUE(code.h.satisfied_by(enc.encode(random_bits(8448, rng)).bits));
    }
}

TEST(Encoder, Linearity) {
    const Encoder enc(k512_code());
    std::mt19937_64 rng(3);
    const auto a = random_bits(512, rng);
    const auto b = random_bits(512, rng);
    std::vector<std::uint8_t> x(512);
    std::transform(a.begin(), a.end(), b.begin(), x.begin(), [](auto p, auto q) { return p ^ q; });
    const auto ca = enc.encode(a).bits;
    const auto cb = enc.encode(b).bits;
    const auto cx = enc.encode(x).bits;
    for (std::size_t i = 0; i < cx.size(); ++i) {
        ASSERT_EQ(cx[i], ca[i] ^ cb[i]);
    }
}

TEST(Encoder, WrongInfoLengthIsInputError) {
    const Encoder enc(k512_code());
    EXPECT_THROW(enc.encode(std::vector<std::uint8_t>(511, 0)), edgeldpc::InputError);
}

TEST(RateMatch, K512ConfigSelection) {
    const RateMatcher rm(k512_code().config);
    ASSERT_EQ(rm.output_length(), 1024U);
    EXPECT_EQ(rm.buffer_length(), 2704U - 104U - 8U);
    const auto sel = rm.selection();
    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i < sel.size(); ++i) {
        ASSERT_GE(sel[i], 104U);
        ASSERT_FALSE(sel[i] >= 512U && sel[i] < 520U) << sel[i];
        ASSERT_TRUE(seen.insert(sel[i]).second) << "repeat at " << i;
        if (i > 0) {
            ASSERT_GT(sel[i], sel[i - 1]);
        }
    }
    EXPECT_EQ(sel.front(), 104U);
}

TEST(RateMatch, FullBufferIsIdentityOverTransmittablePositions) {
    const auto toy = toy_code();
    const RateMatcher rm(toy.cfg);
    EXPECT_EQ(std::vector<std::uint32_t>(rm.selection().begin(), rm.selection().end()),
              (std::vector<std::uint32_t>{0, 1, 2, 3}));

    const auto table = load_nr_lifting_sizes(edgeldpc::test::data_dir());
    const auto cfg = make_code_config(512, 2592, table);
    const RateMatcher full(cfg);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t p = 104; p < 2704; ++p) {
        if (p < 512 || p >= 520) {
            expected.push_back(p);
        }
    }
    EXPECT_EQ(std::vector<std::uint32_t>(full.selection().begin(), full.selection().end()),
              expected);
}

TEST(RateMatch, WrapBeyondOnePassIsRejected) {
    const auto table = load_nr_lifting_sizes(edgeldpc::test::data_dir());
    EXPECT_NO_THROW(RateMatcher(make_code_config(512, 2 * 2592, table)));
    EXPECT_THROW(RateMatcher(make_code_config(512, 2 * 2592 + 1, table)),
                 edgeldpc::ConstructionError);
}

TEST(RateRecover, PuncturedZeroFillerSaturatedSignsRoundTrip) {
    const auto& code = k512_code();
    const Encoder enc(code);
    const RateMatcher rm(code.config);
    std::mt19937_64 rng(5);
    const auto cw = enc.encode(random_bits(512, rng));
    const auto tx = rm.match(cw);
    ASSERT_EQ(tx.bits.size(), 1024U);
    std::vector<float> llr(tx.bits.size());
    for (std::size_t i = 0; i < llr.size(); ++i) {
        llr[i] = tx.bits[i] != 0 ? -kLlrSat : kLlrSat;
    }
    const auto rec = rm.recover(llr);
    ASSERT_EQ(rec.size(), 2704U);
    for (std::size_t p = 0; p < 104; ++p) {
        EXPECT_EQ(rec[p], 0.0F);
    }
    for (std::size_t p = 512; p < 520; ++p) {
        EXPECT_EQ(rec[p], kLlrSat);
    }
    for (auto p : tx.selection) {
        EXPECT_EQ(hard_bit(rec[p]), cw.bits[p]);
    }
}

TEST(RateRecover, RepeatedPositionsAreSummedThenClamped) {
    const auto table = load_nr_lifting_sizes(edgeldpc::test::data_dir());
    const auto cfg = make_code_config(512, 2592 + 10, table);
    const RateMatcher rm(cfg);
    std::vector<float> llr(rm.output_length(), 1.5F);
    llr[0] = 20.0F;
    llr[2592] = 20.0F;
    const auto rec = rm.recover(llr);
    EXPECT_EQ(rec[104], kLlrSat);
    EXPECT_EQ(rec[105], 3.0F);
    EXPECT_EQ(rec[200], 1.5F);
}

TEST(RateRecover, LengthMismatchIsInputError) {
    const RateMatcher rm(k512_code().config);
    EXPECT_THROW(rm.recover(std::vector<float>(1023, 0.0F)), edgeldpc::InputError);
}

TEST(CheckNode, MinSumByHand) {
    std::vector<float> out(3);
    cn_update(std::vector<float>{2.0F, -3.0F, 5.0F}, out, CnRule::normalized_min_sum, 1.0F);
    EXPECT_EQ(out, (std::vector<float>{-3.0F, 2.0F, -2.0F}));
    cn_update(std::vector<float>{2.0F, -3.0F, 5.0F}, out, CnRule::normalized_min_sum, 0.75F);
    EXPECT_EQ(out, (std::vector<float>{-2.25F, 1.5F, -1.5F}));
}

TEST(CheckNode, ErasureAbsorbs) {
    for (auto rule : {CnRule::sum_product, CnRule::normalized_min_sum}) {
        std::vector<float> out(4);
        cn_update(std::vector<float>{0.0F, -3.0F, 5.0F, 7.0F}, out, rule, 1.0F);
        EXPECT_NE(out[0], 0.0F);
        EXPECT_EQ(std::fabs(out[1]), 0.0F);
        EXPECT_EQ(std::fabs(out[2]), 0.0F);
        EXPECT_EQ(std::fabs(out[3]), 0.0F);
    }
}

TEST(CheckNode, SumProductMatchesDoublePrecisionOracle) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<float> mag(-40.0F, 40.0F);
    std::uniform_int_distribution<std::size_t> deg(2, 19);
    double worst = 0.0;
    for (int t = 0; t < 20000; ++t) {
        const auto d = deg(rng);
        std::vector<float> in(d);
        for (auto& x : in) {
            x = t % 3 == 0 ? mag(rng) / 8.0F : mag(rng);
        }
        std::vector<float> out(d);
        cn_update(in, out, CnRule::sum_product);
        std::vector<double> ind(in.begin(), in.end());
        for (std::size_t j = 0; j < d; ++j) {
            const double ref = oracle_sum_product(ind, j);
            const double err = std::fabs(out[j] - ref);
            worst = std::max(worst, err / (1.0 + std::fabs(ref)));
            ASSERT_LE(err, 1e-3 * (1.0 + std::fabs(ref))) << "t=" << t << " j=" << j;
        }
    }
    RecordProperty("worst_relative_error", std::to_string(worst));
}

TEST(CheckNode, RulesAgreeInSign) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<float> v(-10.0F, 10.0F);
    for (int t = 0; t < 5000; ++t) {
        std::vector<float> in(2 + t % 10);
        for (auto& x : in) {
            x = v(rng);
        }
        std::vector<float> sp(in.size());
        std::vector<float> ms(in.size());
        cn_update(in, sp, CnRule::sum_product);
        cn_update(in, ms, CnRule::normalized_min_sum, 0.75F);
        for (std::size_t j = 0; j < in.size(); ++j) {
            if (sp[j] != 0.0F && ms[j] != 0.0F) {
                ASSERT_EQ(std::signbit(sp[j]), std::signbit(ms[j]));
            }
        }
    }
}

TEST(CheckNode, InputsAreClampedAndDegreeChecked) {
    std::vector<float> out(2);
    cn_update(std::vector<float>{1e6F, 100.0F}, out, CnRule::normalized_min_sum, 1.0F);
    EXPECT_EQ(out[0], kLlrSat);
    EXPECT_EQ(out[1], kLlrSat);
    std::vector<float> one(1);
    EXPECT_THROW(cn_update(std::vector<float>{1.0F}, one, CnRule::sum_product),
                 edgeldpc::InputError);
}

TEST(CheckNode, RuleNames) {
    EXPECT_EQ(parse_cn_rule("sum_product"), CnRule::sum_product);
    EXPECT_EQ(parse_cn_rule("nms"), CnRule::normalized_min_sum);
    EXPECT_FALSE(parse_cn_rule("layered").has_value());
    EXPECT_EQ(to_string(CnRule::normalized_min_sum), "normalized_min_sum");
}

TEST(DecodeParams, Validation) {
    EXPECT_THROW((DecodeParams{0}.validate()), edgeldpc::InputError);
    EXPECT_THROW((DecodeParams{4, CnRule::normalized_min_sum, 0.0F}.validate()),
                 edgeldpc::InputError);
    EXPECT_THROW((DecodeParams{4, CnRule::normalized_min_sum, 1.5F}.validate()),
                 edgeldpc::InputError);
    EXPECT_NO_THROW((DecodeParams{4, CnRule::normalized_min_sum, 1.0F}.validate()));
}

TEST(Decoder, ToyErasureRecoveredInOneIteration) {
    const auto toy = toy_code();
    const Decoder dec(toy.cfg, toy.h, DecodeParams{1});
    auto ws = dec.make_workspace();
    // codeword (1,0,0,1); bit 0 erased
    const std::vector<float> ch = {0.0F, kLlrSat, kLlrSat, -kLlrSat};
    std::vector<std::uint8_t> info(2);
    const auto r = dec.decode_lifted(ch, ws, info);
    EXPECT_EQ(info, (std::vector<std::uint8_t>{1, 0}));
    EXPECT_EQ(r.iterations, 1U);
    EXPECT_TRUE(r.parity_satisfied);
}

TEST(Decoder, NoiselessSaturatedRecoversExactly) {
    const auto& code = k512_code();
    for (auto rule : {CnRule::sum_product, CnRule::normalized_min_sum}) {
        const Decoder dec(code, DecodeParams{4, rule});
        const auto b = make_batch(40, kLlrSat, 0.0F, 23);
        auto backend = make_ref_st_backend();
        const auto out = decode_batch(b.view(), dec, *backend);
        EXPECT_EQ(out.info_bits, b.info);
        for (auto ok : out.parity_satisfied) {
            EXPECT_EQ(ok, 1);
        }
    }
}

TEST(Decoder, FixedIterationCountIndependentOfChannel) {
    const auto& code = k512_code();
    const Decoder dec(code, DecodeParams{7});
    auto backend = make_ref_st_backend();
    for (float sigma : {0.0F, 2.5F}) {
        const auto b = make_batch(20, sigma > 0 ? 2.0F : kLlrSat, sigma, 29);
        const auto out = decode_batch(b.view(), dec, *backend);
        for (auto it : out.iterations_run) {
            EXPECT_EQ(it, 7U);
        }
    }
    const Decoder early(code, DecodeParams{7, CnRule::sum_product, 0.75F, true});
    const auto clean = make_batch(20, kLlrSat, 0.0F, 31);
    const auto out = decode_batch(clean.view(), early, *backend);
    // punctured columns start erased, so the first hard decision may still miss them
    for (std::size_t i = 0; i < out.n_cw; ++i) {
        EXPECT_LE(out.iterations_run[i], 2U);
        EXPECT_EQ(out.parity_satisfied[i], 1);
    }
}

TEST(Decoder, BatchStackingEqualsSeparateDecodes) {
    const auto& code = k512_code();
    const Decoder dec(code, DecodeParams{10});
    auto backend = make_ref_st_backend();
    const auto both = make_batch(2, 2.0F, 2.0F, 37);
    const std::size_t e = 1024;
    Batch l1{{}, {both.llrs.begin(), both.llrs.begin() + e}, 1};
    Batch l2{{}, {both.llrs.begin() + e, both.llrs.end()}, 1};
    const auto o = decode_batch(both.view(), dec, *backend);
    const auto o1 = decode_batch(l1.view(), dec, *backend);
    const auto o2 = decode_batch(l2.view(), dec, *backend);
    EXPECT_TRUE(std::equal(o1.info_bits.begin(), o1.info_bits.end(), o.row(0).begin()));
    EXPECT_TRUE(std::equal(o2.info_bits.begin(), o2.info_bits.end(), o.row(1).begin()));
}

TEST(Decoder, GroupedLanesMatchSingleCodewordPath) {
    const auto& code = k512_code();
    for (auto rule : {CnRule::sum_product, CnRule::normalized_min_sum}) {
        for (bool early : {false, true}) {
            const Decoder dec(code, DecodeParams{12, rule, 0.75F, early});
            const auto b = make_batch(37, 1.5F, 2.0F, 41);
            auto backend = make_ref_st_backend();
            const auto grouped = decode_batch(b.view(), dec, *backend);
            auto ws = dec.make_workspace();
            for (std::size_t i = 0; i < b.rows; ++i) {
                std::vector<std::uint8_t> info(512);
                const auto r = dec.decode_rate_matched(b.view().row(i), ws, info);
                ASSERT_TRUE(std::equal(info.begin(), info.end(), grouped.row(i).begin()))
                    << "codeword " << i;
                ASSERT_EQ(r.iterations, grouped.iterations_run[i]);
                ASSERT_EQ(r.parity_satisfied ? 1 : 0, grouped.parity_satisfied[i]);
            }
        }
    }
}

TEST(Decoder, BackendsAndLaneCountsAreBitIdentical) {
    const auto& code = k512_code();
    const Decoder dec(code, DecodeParams{8});
    const auto b = make_batch(53, 1.5F, 2.2F, 43);
    auto ref = make_ref_st_backend();
    const auto expected = decode_batch(b.view(), dec, *ref);
    for (unsigned lanes : {1U, 2U, 3U, 4U, 7U}) {
        auto par = make_par_cpu_backend(lanes);
        EXPECT_EQ(par->capabilities().max_parallel_lanes, lanes);
        const auto got = decode_batch(b.view(), dec, *par);
        EXPECT_TRUE(got == expected) << "lanes=" << lanes;
        EXPECT_TRUE(decode_batch(b.view(), dec, *par) == expected) << "repeat, lanes=" << lanes;
    }
}

TEST(Decoder, ModerateNoiseIsCorrected) {
    const auto& code = k512_code();
    const Decoder dec(code, DecodeParams{20});
    // consistent Gaussian LLRs (variance = 2 * mean) at 3 dB Eb/N0
    const auto b = make_batch(32, 4.0F, std::sqrt(8.0F), 47);
    auto backend = make_ref_st_backend();
    const auto out = decode_batch(b.view(), dec, *backend);
    std::size_t errors = 0;
    for (std::size_t i = 0; i < b.info.size(); ++i) {
        errors += out.info_bits[i] != b.info[i] ? 1 : 0;
    }
    EXPECT_EQ(errors, 0U);
}

TEST(DecodeBatch, ShapeMismatchIsInputError) {
    const Decoder dec(k512_code(), DecodeParams{4});
    auto backend = make_ref_st_backend();
    std::vector<float> llr(1000, 1.0F);
    EXPECT_THROW(decode_batch({llr, 1, 1000}, dec, *backend), edgeldpc::InputError);
    EXPECT_THROW(decode_batch({llr, 2, 1024}, dec, *backend), edgeldpc::InputError);
}

TEST(BackendRegistry, BuiltinsAndUnknownName) {
    const auto reg = BackendRegistry::with_builtins();
    EXPECT_EQ(reg.names(), (std::vector<std::string>{"par-cpu", "ref-st"}));
    EXPECT_EQ(reg.create("ref-st")->name(), "ref-st");
    EXPECT_EQ(reg.create("par-cpu", BackendOptions{3})->capabilities().max_parallel_lanes, 3U);
    try {
        reg.create("gpu-cuda");
        FAIL() << "expected BackendError";
    } catch (const edgeldpc::BackendError& e) {
        EXPECT_NE(std::string(e.what()).find("gpu-cuda"), std::string::npos);
    }
}

TEST(BackendRegistry, NonLibraryFailuresAreWrappedAsBackendErrors) {
    class Failing final : public DecodeBackend {
    public:
        std::string_view name() const override { return "broken"; }
        BackendCapabilities capabilities() const override { return {}; }
        void decode(const Decoder&, SoftMatrixView, DecodeOutcome&) override {
            throw std::runtime_error("device lost");
        }
    };
    const Decoder dec(k512_code(), DecodeParams{4});
    std::vector<float> llr(1024, 1.0F);
    Failing f;
    try {
        decode_batch({llr, 1, 1024}, dec, f);
        FAIL() << "expected BackendError";
    } catch (const edgeldpc::BackendError& e) {
        EXPECT_NE(std::string(e.what()).find("broken"), std::string::npos);
    }
}

}  // namespace

// NOLINTEND(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)
