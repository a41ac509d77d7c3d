#include "pdalift/caching_sim.hpp"

#include <random>
#include <sstream>

namespace pdalift {

FileStore::FileStore(int files, long long bytes_per_file, int subfiles, std::uint64_t seed)
    : files_(files), bytes_per_file_(bytes_per_file), subfiles_(subfiles) {
    if (files < 1 || bytes_per_file < 1 || subfiles < 1)
        throw Error(Errc::bad_grid, "FileStore: positive sizes required");
    if (bytes_per_file % subfiles != 0)
        throw Error(Errc::subpacketization_mismatch,
                    "FileStore: file size must be a multiple of the subfile count");
    std::mt19937_64 rng(seed);
    data_.resize(files);
    for (auto& f : data_) {
        f.resize(static_cast<size_t>(bytes_per_file));
        for (auto& b : f) b = static_cast<std::uint8_t>(rng() & 0xff);
    }
}

std::vector<std::uint8_t> FileStore::subfile(int i, int j) const {
    const long long sz = subfile_bytes();
    const auto& f = data_[i];
    return {f.begin() + static_cast<long>(j * sz), f.begin() + static_cast<long>((j + 1) * sz)};
}

long long CacheContents::bytes() const {
    long long n = 0;
    for (const auto& [key, payload] : entries) n += static_cast<long long>(payload.size());
    return n;
}

long long TransmissionSet::bytes() const {
    long long n = 0;
    for (const auto& [s, payload] : packets) n += static_cast<long long>(payload.size());
    return n;
}

std::vector<CacheContents> place(const PdaArray& p, const FileStore& store) {
    if (store.subfiles() != p.rows())
        throw Error(Errc::subpacketization_mismatch,
                    "place: store subfile count differs from array rows");
    std::vector<CacheContents> caches(p.cols());
    for (int k = 0; k < p.cols(); ++k)
        for (int j = 0; j < p.rows(); ++j)
            if (p.is_star(j, k))
                for (int i = 0; i < store.files(); ++i)
                    caches[k].entries[{i, j}] = store.subfile(i, j);
    return caches;
}

namespace {

void xor_into(std::vector<std::uint8_t>& acc, const std::vector<std::uint8_t>& v) {
    if (acc.empty()) acc.assign(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) acc[i] ^= v[i];
}

// decode() with the symbol occurrence lists precomputed; the packet for the
// user's row is cancelled against cached subfiles of every other occurrence.
std::vector<std::uint8_t> decode_with(
    int user, const CacheContents& cache, const TransmissionSet& tx, const PdaArray& p,
    const std::vector<int>& demand,
    const std::map<Symbol, std::vector<std::pair<int, int>>>& occ) {
    const int want = demand[user];
    std::vector<std::uint8_t> out;
    for (int j = 0; j < p.rows(); ++j) {
        if (p.is_star(j, user)) {
            const auto it = cache.entries.find({want, j});
            if (it == cache.entries.end())
                throw Error(Errc::decode_failure, "decode: cached subfile missing");
            out.insert(out.end(), it->second.begin(), it->second.end());
            continue;
        }
        const Symbol s = p.at(j, user);
        const auto pk = tx.packets.find(s);
        if (pk == tx.packets.end())
            throw Error(Errc::decode_failure, "decode: packet missing for symbol");
        std::vector<std::uint8_t> acc = pk->second;
        for (const auto& [jj, kk] : occ.at(s)) {
            if (jj == j && kk == user) continue;
            const auto it = cache.entries.find({demand[kk], jj});
            if (it == cache.entries.end()) {
                std::ostringstream d;
                d << "decode: user " << user << " cannot cancel subfile (" << demand[kk]
                  << "," << jj << ") for symbol " << s;
                throw Error(Errc::decode_failure, d.str());
            }
            xor_into(acc, it->second);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}

}  // namespace

TransmissionSet deliver(const PdaArray& p, const FileStore& store,
                        const std::vector<int>& demand) {
    if (static_cast<int>(demand.size()) != p.cols())
        throw Error(Errc::bad_demand, "deliver: demand vector length differs from user count");
    for (int d : demand)
        if (d < 0 || d >= store.files())
            throw Error(Errc::bad_demand, "deliver: demanded file out of range");
    TransmissionSet tx;
    for (int j = 0; j < p.rows(); ++j)
        for (int k = 0; k < p.cols(); ++k)
            if (!p.is_star(j, k)) xor_into(tx.packets[p.at(j, k)], store.subfile(demand[k], j));
    return tx;
}

std::vector<std::uint8_t> decode(int user, const CacheContents& cache,
                                 const TransmissionSet& tx, const PdaArray& p,
                                 const std::vector<int>& demand) {
    return decode_with(user, cache, tx, p, demand, occurrences(p));
}

VerifyReport round_trip_verify(const PdaArray& p, int files, long long bytes_per_file,
                               const std::vector<std::vector<int>>& demands,
                               std::uint64_t store_seed) {
    const FileStore store(files, bytes_per_file, p.rows(), store_seed);
    const auto caches = place(p, store);
    const auto occ = occurrences(p);

    VerifyReport out;
    out.measured_memory_ratio = Rational::of(
        caches.empty() ? 0 : caches[0].bytes(), static_cast<long long>(files) * bytes_per_file);
    out.decoded_ok = true;
    for (const auto& c : caches)
        if (c.bytes() != caches[0].bytes()) {
            out.decoded_ok = false;
            out.failure = "uneven cache sizes across users";
            return out;
        }
    for (const auto& demand : demands) {
        const auto tx = deliver(p, store, demand);
        out.measured_rate = Rational::of(tx.bytes(), bytes_per_file);
        for (int k = 0; k < p.cols(); ++k) {
            std::vector<std::uint8_t> got;
            try {
                got = decode_with(k, caches[k], tx, p, demand, occ);
            } catch (const Error& e) {
                out.decoded_ok = false;
                out.failure = e.what();
                return out;
            }
            if (got != store.file(demand[k])) {
                out.decoded_ok = false;
                std::ostringstream d;
                d << "user " << k << " decoded wrong bytes for file " << demand[k];
                out.failure = d.str();
                return out;
            }
        }
        ++out.trials;
    }
    return out;
}

VerifyReport round_trip_verify(const PdaArray& p, int files, long long bytes_per_file,
                               int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> demands;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> d(p.cols());
        for (auto& v : d) v = static_cast<int>(rng() % static_cast<std::uint64_t>(files));
        demands.push_back(std::move(d));
    }
    return round_trip_verify(p, files, bytes_per_file, demands);
}

}  // namespace pdalift
