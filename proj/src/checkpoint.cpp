#include "oscilloflow/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace oscf {

namespace {

constexpr char kMagic[5] = {'O', 'S', 'C', 'F', '1'};

void put_u8(std::vector<std::uint8_t>& buf, std::uint8_t v) { buf.push_back(v); }

void put_u32(std::vector<std::uint8_t>& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<std::uint8_t>& buf, double v) {
    put_u64(buf, std::bit_cast<std::uint64_t>(v));
}

class Reader {
public:
    explicit Reader(std::vector<std::uint8_t> data) : data_(std::move(data)) {}

    std::size_t offset() const { return off_; }
    std::size_t remaining() const { return data_.size() - off_; }

    void need(std::size_t bytes, const char* what) {
        if (remaining() < bytes)
            throw CheckpointError("checkpoint truncated at byte offset " + std::to_string(off_) +
                                  ": expected " + std::to_string(bytes) + " more byte(s) for " +
                                  what);
    }

    std::uint8_t u8(const char* what) {
        need(1, what);
        return data_[off_++];
    }

    std::uint32_t u32(const char* what) {
        need(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[off_ + static_cast<std::size_t>(i)]) << (8 * i);
        off_ += 4;
        return v;
    }

    std::uint64_t u64(const char* what) {
        need(8, what);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[off_ + static_cast<std::size_t>(i)]) << (8 * i);
        off_ += 8;
        return v;
    }

    double f64(const char* what) { return std::bit_cast<double>(u64(what)); }

    const std::vector<std::uint8_t>& data() const { return data_; }

private:
    std::vector<std::uint8_t> data_;
    std::size_t off_ = 0;
};

} // namespace

void persist_checkpoint(const SimulationState& state, const SimulationConfig& cfg,
                        const std::string& path) {
    if (state.health != Health::ok)
        throw DomainError("persist_checkpoint: state is not healthy");

    std::vector<std::uint8_t> buf;
    buf.insert(buf.end(), kMagic, kMagic + 5);
    put_u8(buf, cfg.equation == EquationKind::NS ? 0 : 1);
    put_u8(buf, static_cast<std::uint8_t>(cfg.grid.dim()));
    put_u32(buf, static_cast<std::uint32_t>(cfg.grid.points_per_axis()));
    put_f64(buf, cfg.alpha);
    put_f64(buf, cfg.profile.n_multiplier);
    put_f64(buf, state.time);
    put_u64(buf, state.step_count);
    for (int c = 0; c < state.field.components(); ++c)
        for (const auto& z : state.field.component(c)) {
            put_f64(buf, z.real());
            put_f64(buf, z.imag());
        }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("persist_checkpoint: cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) throw ConfigError("persist_checkpoint: write failed for '" + path + "'");
}

LoadedCheckpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    Reader r(std::move(data));

    r.need(5, "magic");
    for (int i = 0; i < 5; ++i)
        if (r.data()[static_cast<std::size_t>(i)] != static_cast<std::uint8_t>(kMagic[i]))
            throw CheckpointError("checkpoint magic mismatch at byte offset " + std::to_string(i));
    for (int i = 0; i < 5; ++i) r.u8("magic");

    const std::uint8_t eq = r.u8("equation kind");
    if (eq > 1) throw CheckpointError("invalid equation kind at byte offset 5");
    const std::uint8_t dim = r.u8("dim");
    if (dim != 2 && dim != 3) throw CheckpointError("invalid dim at byte offset 6");
    const std::uint32_t n = r.u32("points_per_axis");
    if (n < 8 || n % 2 != 0 || n > (1u << 16))
        throw CheckpointError("invalid points_per_axis at byte offset 7");
    const double alpha = r.f64("alpha");
    const double n_mult = r.f64("oscillation multiplier");
    const double time = r.f64("time");
    const std::uint64_t steps = r.u64("step count");

    const EquationKind equation = eq == 0 ? EquationKind::NS : EquationKind::SQG;
    const TorusGrid grid(static_cast<int>(dim), static_cast<int>(n));
    const int components = equation == EquationKind::NS ? grid.dim() : 1;

    SpectralField field(grid, components);
    for (int c = 0; c < components; ++c)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double re = r.f64("coefficient");
            const double im = r.f64("coefficient");
            field.at(c, i) = {re, im};
        }
    if (r.remaining() != 0)
        throw CheckpointError("checkpoint has " + std::to_string(r.remaining()) +
                              " trailing byte(s) at offset " + std::to_string(r.offset()));

    SimulationState state(std::move(field));
    state.time = time;
    state.step_count = steps;
    return {std::move(state), equation, static_cast<int>(dim), static_cast<int>(n), alpha,
            n_mult};
}

} // namespace oscf
