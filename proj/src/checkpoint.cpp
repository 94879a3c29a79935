// Copyright 2026 The pftc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "pftc/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "pftc/errors.hpp"

namespace pftc {
namespace {

static_assert(std::endian::native == std::endian::little, "checkpoint encoding assumes a little-endian host");

constexpr char kMagic[8] = {'P', 'F', 'T', 'C', 'C', 'K', 'P', 'T'};

class Writer {
  public:
    template <class T> void put(T v) {
        char raw[sizeof(T)];
        std::memcpy(raw, &v, sizeof(T));
        buf_.append(raw, sizeof(T));
    }
    void bytes(const char* p, std::size_t n) { buf_.append(p, n); }
    const std::string& str() const { return buf_; }

  private:
    std::string buf_;
};

class Reader {
  public:
    explicit Reader(std::string_view data) : data_(data) {}
    template <class T> T get() {
        if (pos_ + sizeof(T) > data_.size()) {
            throw CheckpointError("checkpoint truncated");
        }
        T v;
        std::memcpy(&v, data_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }
    std::string_view bytes(std::size_t n) {
        if (pos_ + n > data_.size()) {
            throw CheckpointError("checkpoint truncated");
        }
        auto out = data_.substr(pos_, n);
        pos_ += n;
        return out;
    }
    std::size_t position() const { return pos_; }

  private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

void put_moments(Writer& w, const std::vector<RunningMoments>& m) {
    for (const auto& r : m) {
        w.put<std::int64_t>(r.count());
        w.put<double>(r.mean());
        w.put<double>(r.m2());
    }
}

std::vector<RunningMoments> get_moments(Reader& r, std::size_t n) {
    std::vector<RunningMoments> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto count = r.get<std::int64_t>();
        const auto mean = r.get<double>();
        const auto m2 = r.get<double>();
        out.push_back(RunningMoments::from_raw(count, mean, m2));
    }
    return out;
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_cell_checkpoint(const std::filesystem::path& file, const CellCheckpoint& ckpt) {
    const auto& s = ckpt.stats;
    Writer w;
    w.bytes(kMagic, sizeof(kMagic));
    w.put<std::uint32_t>(kCheckpointVersion);
    w.put<std::uint64_t>(ckpt.grid_hash);
    w.put<std::uint64_t>(ckpt.cell_index);
    w.put<std::int64_t>(ckpt.completed);
    w.put<std::int32_t>(s.N);
    w.put<double>(s.T);
    w.put<std::uint8_t>(s.has_qfi ? 1 : 0);
    w.put<std::uint64_t>(s.times.size());
    for (auto t : s.times) {
        w.put<std::int64_t>(t);
    }
    put_moments(w, s.sz);
    put_moments(w, s.entanglement);
    put_moments(w, s.coherence);
    if (s.has_qfi) {
        put_moments(w, s.qfi);
    }
    w.put<std::uint64_t>(s.realization_lifetimes.size());
    for (std::size_t i = 0; i < s.realization_lifetimes.size(); ++i) {
        w.put<std::int64_t>(s.realization_lifetimes[i].periods);
        w.put<std::uint8_t>(s.realization_lifetimes[i].capped ? 1 : 0);
        w.put<double>(s.realization_peak_qfi_ratio[i]);
    }
    w.put<std::uint64_t>(fnv1a64(w.str()));

    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write checkpoint " + tmp.string());
        }
        out.write(w.str().data(), static_cast<std::streamsize>(w.str().size()));
        if (!out) {
            throw IoError("failed writing checkpoint " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, file);
}

std::optional<CellCheckpoint> read_cell_checkpoint(const std::filesystem::path& file, std::uint64_t expected_hash) {
    if (!std::filesystem::exists(file)) {
        return std::nullopt;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw CheckpointError("cannot open checkpoint " + file.string());
    }
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < sizeof(kMagic) + sizeof(std::uint64_t)) {
        throw CheckpointError("checkpoint " + file.string() + " is truncated");
    }
    const std::string_view body(data.data(), data.size() - sizeof(std::uint64_t));
    std::uint64_t stored_sum;
    std::memcpy(&stored_sum, data.data() + body.size(), sizeof(stored_sum));
    if (fnv1a64(body) != stored_sum) {
        throw CheckpointError("checkpoint " + file.string() + " failed its checksum");
    }

    Reader r(body);
    if (r.bytes(sizeof(kMagic)) != std::string_view(kMagic, sizeof(kMagic))) {
        throw CheckpointError(file.string() + " is not a checkpoint file");
    }
    const auto version = r.get<std::uint32_t>();
    if (version != kCheckpointVersion) {
        throw CheckpointError("unsupported checkpoint version " + std::to_string(version));
    }
    CellCheckpoint ck;
    ck.grid_hash = r.get<std::uint64_t>();
    if (ck.grid_hash != expected_hash) {
        throw CheckpointError("checkpoint " + file.string() + " belongs to a different grid; refusing to resume");
    }
    ck.cell_index = r.get<std::uint64_t>();
    ck.completed = r.get<std::int64_t>();
    auto& s = ck.stats;
    s.N = r.get<std::int32_t>();
    s.T = r.get<double>();
    s.has_qfi = r.get<std::uint8_t>() != 0;
    const auto n = r.get<std::uint64_t>();
    s.times.resize(n);
    for (auto& t : s.times) {
        t = r.get<std::int64_t>();
    }
    s.sz = get_moments(r, n);
    s.entanglement = get_moments(r, n);
    s.coherence = get_moments(r, n);
    if (s.has_qfi) {
        s.qfi = get_moments(r, n);
    }
    const auto reals = r.get<std::uint64_t>();
    for (std::uint64_t i = 0; i < reals; ++i) {
        Lifetime l;
        l.periods = r.get<std::int64_t>();
        l.capped = r.get<std::uint8_t>() != 0;
        s.realization_lifetimes.push_back(l);
        s.realization_peak_qfi_ratio.push_back(r.get<double>());
    }
    if (r.position() != body.size() || static_cast<std::int64_t>(reals) != ck.completed) {
        throw CheckpointError("checkpoint " + file.string() + " is inconsistent");
    }
    return ck;
}

} // namespace pftc
