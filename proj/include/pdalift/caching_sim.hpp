#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdalift/pda.hpp"
#include "pdalift/validate.hpp"

namespace pdalift {

// N files of F bytes, each split into f subfiles of F/f bytes. F must be a
// multiple of f; the simulator rejects padding.
class FileStore {
public:
    FileStore(int files, long long bytes_per_file, int subfiles, std::uint64_t seed);

    int files() const { return files_; }
    long long bytes_per_file() const { return bytes_per_file_; }
    int subfiles() const { return subfiles_; }
    long long subfile_bytes() const { return bytes_per_file_ / subfiles_; }

    const std::vector<std::uint8_t>& file(int i) const { return data_[i]; }
    std::vector<std::uint8_t> subfile(int i, int j) const;

private:
    int files_;
    long long bytes_per_file_;
    int subfiles_;
    std::vector<std::vector<std::uint8_t>> data_;
};

// Per-user cache: subfile (file, row) -> payload. Stars of the user's column
// decide which rows are cached, for every file.
struct CacheContents {
    std::map<std::pair<int, int>, std::vector<std::uint8_t>> entries;
    long long bytes() const;
};

std::vector<CacheContents> place(const PdaArray& p, const FileStore& store);

// One multicast packet per symbol: the XOR of W_{D_k, j} over cells (j,k)
// holding that symbol.
struct TransmissionSet {
    std::map<Symbol, std::vector<std::uint8_t>> packets;
    long long bytes() const;
};

TransmissionSet deliver(const PdaArray& p, const FileStore& store,
                        const std::vector<int>& demand);

// Reconstruct user's demanded file from cache and transmissions only.
// Throws Error(decode_failure) when a needed subfile is not cached; for a
// valid PDA this never happens.
std::vector<std::uint8_t> decode(int user, const CacheContents& cache,
                                 const TransmissionSet& tx, const PdaArray& p,
                                 const std::vector<int>& demand);

struct VerifyReport {
    bool decoded_ok = false;
    Rational measured_rate;
    Rational measured_memory_ratio;
    long long trials = 0;
    std::string failure;
};

// End-to-end check over explicit demand vectors.
VerifyReport round_trip_verify(const PdaArray& p, int files, long long bytes_per_file,
                               const std::vector<std::vector<int>>& demands,
                               std::uint64_t store_seed = 0x9e3779b97f4a7c15ULL);

// End-to-end check over `trials` seeded random demand vectors.
VerifyReport round_trip_verify(const PdaArray& p, int files, long long bytes_per_file,
                               int trials, std::uint64_t seed);

}  // namespace pdalift
