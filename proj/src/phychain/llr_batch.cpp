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

#include "edgeldpc/phychain/llr_batch.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "edgeldpc/codec/encoder.hpp"
#include "edgeldpc/codec/rate_match.hpp"
#include "edgeldpc/common/error.hpp"
#include "edgeldpc/phychain/philox.hpp"

namespace edgeldpc::phychain {

namespace {

constexpr char kMagic[4] = {'L', 'L', 'R', 'B'};

void draw_info_bits(std::uint64_t seed, std::uint64_t codeword, std::span<std::uint8_t> out) {
    const Philox4x32 gen(seed);
    const auto cw_lo = static_cast<std::uint32_t>(codeword);
    const auto cw_hi = static_cast<std::uint32_t>(codeword >> 32);
    for (std::size_t block = 0; block * 128 < out.size(); ++block) {
        const auto r = gen({static_cast<std::uint32_t>(block), cw_lo, cw_hi,
                            static_cast<std::uint32_t>(Stream::info_bits)});
        for (std::size_t i = 0; i < 128 && block * 128 + i < out.size(); ++i) {
            out[block * 128 + i] = static_cast<std::uint8_t>((r[i / 32] >> (i % 32)) & 1U);
        }
    }
}

void put_u16(std::string& s, std::uint16_t v) {
    s.push_back(static_cast<char>(v & 0xFFU));
    s.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& s, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        s.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
    }
}

std::uint32_t get_u32(const unsigned char* p) {
    return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
           std::uint32_t{p[3]} << 24;
}

/// Header plus little-endian payload; shared by the file writer and the hash.
std::string serialize(const LlrBatch& b) {
    std::string s(kMagic, sizeof kMagic);
    put_u16(s, kLlrFileVersion);
    s.append(reinterpret_cast<const char*>(b.fingerprint.data()), b.fingerprint.size());
    put_u32(s, b.n_cw);
    put_u32(s, b.e);
    put_u32(s, b.k_info);
    s.reserve(s.size() + b.llrs.size() * 4 + b.truth_info.size() / 8 + 1);
    for (float x : b.llrs) {
        put_u32(s, std::bit_cast<std::uint32_t>(x));
    }
    std::uint8_t acc = 0;
    std::size_t n = 0;
    for (auto bit : b.truth_info) {
        acc = static_cast<std::uint8_t>(acc << 1 | (bit & 1U));
        if (++n % 8 == 0) {
            s.push_back(static_cast<char>(acc));
            acc = 0;
        }
    }
    if (n % 8 != 0) {
        s.push_back(static_cast<char>(acc << (8 - n % 8)));
    }
    return s;
}

}  // namespace

Digest batch_fingerprint(const construction::CodeConfig& code, const ChannelConfig& chan,
                         Demapper demapper) {
    return sha256("llr-batch v1|" + code.describe() +
                  " punctured_cols=" + std::to_string(code.punctured_cols) + "|" +
                  chan.describe() + "|demapper=" + to_string(demapper));
}

Digest content_hash(const LlrBatch& batch) { return sha256(serialize(batch)); }

SymbolBlock transmit_codeword(std::span<const std::uint8_t> rate_matched_bits,
                              const ChannelConfig& chan, std::uint64_t codeword) {
    SymbolBlock blk;
    blk.symbols = map_16qam(rate_matched_bits);
    blk.received = awgn(blk.symbols, chan, codeword);
    return blk;
}

LlrBatch build_llr_batch(std::uint32_t n_cw, const construction::CodeInstance& code,
                         const ChannelConfig& chan, const BuildOptions& options) {
    chan.validate();
    const auto& cfg = code.config;
    if (cfg.n_coded % kBitsPerSymbol != 0) {
        throw InputError("llr batch: E=" + std::to_string(cfg.n_coded) +
                         " is not a multiple of 4 (16-QAM)");
    }
    if (n_cw == 0) {
        throw InputError("llr batch: N_cw must be positive");
    }
    const codec::Encoder encoder(code);
    const codec::RateMatcher matcher(cfg);

    LlrBatch batch;
    batch.n_cw = n_cw;
    batch.e = cfg.n_coded;
    batch.k_info = cfg.k_info;
    batch.llrs.resize(std::size_t{n_cw} * batch.e);
    batch.truth_info.resize(std::size_t{n_cw} * batch.k_info);
    batch.fingerprint = batch_fingerprint(cfg, chan, options.demapper);

    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint8_t> lifted(encoder.length());
        std::vector<std::uint8_t> tx(batch.e);
        std::vector<Symbol> x(batch.e / kBitsPerSymbol);
        std::vector<Symbol> y(x.size());
        for (std::size_t i = begin; i < end; ++i) {
            auto info = std::span(batch.truth_info).subspan(i * batch.k_info, batch.k_info);
            draw_info_bits(chan.seed, i, info);
            encoder.encode_into(info, lifted);
            matcher.match_into(lifted, tx);
            map_16qam_into(tx, x);
            awgn_into(x, chan, i, y);
            demap_16qam_into(y, chan.n0, options.demapper,
                             std::span(batch.llrs).subspan(i * batch.e, batch.e));
        }
    };

    unsigned lanes = options.lanes == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                        : options.lanes;
    lanes = std::min<unsigned>(lanes, n_cw);
    if (lanes <= 1) {
        work(0, n_cw);
        return batch;
    }
    std::exception_ptr error;
    std::mutex mu;
    {
        std::vector<std::jthread> pool;
        for (unsigned l = 0; l < lanes; ++l) {
            pool.emplace_back([&, l] {
                try {
                    work(std::size_t{n_cw} * l / lanes, std::size_t{n_cw} * (l + 1) / lanes);
                } catch (...) {
                    std::lock_guard lock(mu);
                    error = std::current_exception();
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return batch;
}

void write_llr_batch(const std::filesystem::path& path, const LlrBatch& batch) {
    if (batch.llrs.size() != std::size_t{batch.n_cw} * batch.e ||
        batch.truth_info.size() != std::size_t{batch.n_cw} * batch.k_info) {
        throw InputError("write_llr_batch: batch dimensions are inconsistent");
    }
    const auto bytes = serialize(batch);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IoError("write_llr_batch: cannot write " + path.string());
    }
}

LlrBatch read_llr_batch(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("read_llr_batch: cannot open " + path.string());
    }
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    constexpr std::size_t header = 4 + 2 + 32 + 12;
    if (bytes.size() < header || !std::equal(kMagic, kMagic + 4, bytes.data())) {
        throw IoError("read_llr_batch: " + path.string() + " is not an LLRB file");
    }
    const std::uint16_t version = static_cast<std::uint16_t>(p[4] | p[5] << 8);
    if (version != kLlrFileVersion) {
        throw IoError("read_llr_batch: unsupported version " + std::to_string(version));
    }
    LlrBatch b;
    std::copy_n(p + 6, 32, b.fingerprint.begin());
    b.n_cw = get_u32(p + 38);
    b.e = get_u32(p + 42);
    b.k_info = get_u32(p + 46);
    const std::size_t n_llr = std::size_t{b.n_cw} * b.e;
    const std::size_t n_bits = std::size_t{b.n_cw} * b.k_info;
    if (bytes.size() != header + n_llr * 4 + (n_bits + 7) / 8) {
        throw IoError("read_llr_batch: " + path.string() + " is truncated or has trailing data");
    }
    b.llrs.resize(n_llr);
    for (std::size_t i = 0; i < n_llr; ++i) {
        b.llrs[i] = std::bit_cast<float>(get_u32(p + header + 4 * i));
    }
    const auto* bits = p + header + 4 * n_llr;
    b.truth_info.resize(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) {
        b.truth_info[i] = static_cast<std::uint8_t>((bits[i / 8] >> (7 - i % 8)) & 1U);
    }
    return b;
}

}  // namespace edgeldpc::phychain
