/*
 * Copyright 2026 The sirsde Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIRSDE_RNG_HPP
#define SIRSDE_RNG_HPP

#include <array>
#include <cstdint>

namespace sirsde {

/// Philox4x32 with 10 rounds (Salmon et al., SC'11): a keyed bijection on
/// 128-bit counters.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key) noexcept;
};

/// Reproducible stream of random variates. The triple
/// (master_seed, stream_index, substream) fully determines every draw;
/// the block counter occupies the two low counter words.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint32_t stream_index, std::uint32_t substream = 0) noexcept;

    std::uint64_t master_seed() const noexcept { return seed_; }
    std::uint32_t stream_index() const noexcept { return stream_; }
    std::uint32_t substream() const noexcept { return sub_; }

    /// Stream sharing the seed and index, on a different substream.
    RngStream substream_of(std::uint32_t substream) const noexcept
    {
        return RngStream(seed_, stream_, substream);
    }

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept;
    /// Standard normal via Box-Muller.
    double normal() noexcept;
    /// Gamma(shape, 1) via Marsaglia-Tsang; shape > 0.
    double gamma(double shape) noexcept;

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint32_t stream_;
    std::uint32_t sub_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace sirsde

#endif // SIRSDE_RNG_HPP
