#include "equitab/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <json.hpp>

#include "equitab/error.hpp"

namespace equitab {

using nlohmann::json;

std::string to_string(BasisKind basis) { return basis == BasisKind::Schur ? "s" : "h"; }

namespace {

BasisKind parse_basis(const std::string& s) {
    if (s == "s") return BasisKind::Schur;
    if (s == "h") return BasisKind::H;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

std::string encode(const Composition& key, BasisKind basis, const SchurVector::Terms& terms) {
    json terms_json = json::array();
    for (const auto& [p, c] : terms) terms_json.push_back(json::array({p.vec(), c}));
    json record{{"key", key.vec()}, {"basis", to_string(basis)}, {"terms", terms_json}, {"engine_version", kEngineVersion}};
    return record.dump();
}

// Holds an exclusive advisory lock on an open descriptor.
class LockedFile {
public:
    LockedFile(const std::filesystem::path& path, int flags) : fd_(::open(path.c_str(), flags, 0644)) {
        if (fd_ < 0) fail(ErrorKind::Io, "cannot open cache " + path.string() + ": " + std::strerror(errno));
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            fail(ErrorKind::Io, "cannot lock cache " + path.string() + ": " + std::strerror(errno));
        }
    }
    ~LockedFile() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;
    int fd() const noexcept { return fd_; }

private:
    int fd_;
};

}  // namespace

NdjsonStore::NdjsonStore(std::filesystem::path path) : path_(std::move(path)) {
    if (!std::filesystem::exists(path_)) return;
    LockedFile lock(path_, O_RDONLY);
    std::ifstream in(path_);
    if (!in) fail(ErrorKind::Io, "cannot read cache " + path_.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const json record = json::parse(line);
            if (record.at("engine_version").get<std::string>() != kEngineVersion) continue;
            const Composition key(record.at("key").get<std::vector<int>>());
            if (key != canonical(key)) throw std::invalid_argument("key is not canonical");
            const BasisKind basis = parse_basis(record.at("basis").get<std::string>());
            SchurVector::Terms terms;
            for (const auto& term : record.at("terms")) {
                const Partition p(term.at(0).get<std::vector<int>>());
                const auto c = term.at(1).get<std::int64_t>();
                if (c == 0 || !terms.emplace(p, c).second) throw std::invalid_argument("bad term list");
            }
            records_[{key, basis}] = std::move(terms);
        } catch (const std::exception& e) {
            warnings_.push_back(path_.string() + ":" + std::to_string(lineno) + ": skipped corrupt record (" + e.what() + ")");
        }
    }
}

std::optional<SchurVector::Terms> NdjsonStore::load(const Composition& key, BasisKind basis) {
    auto it = records_.find({key, basis});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void NdjsonStore::save(const Composition& key, BasisKind basis, const SchurVector::Terms& terms) {
    auto [it, inserted] = records_.try_emplace({key, basis}, terms);
    if (!inserted) return;
    const std::string line = encode(key, basis, terms) + "\n";
    LockedFile lock(path_, O_WRONLY | O_CREAT | O_APPEND);
    std::size_t written = 0;
    while (written < line.size()) {
        const ssize_t n = ::write(lock.fd(), line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            fail(ErrorKind::Io, "cannot write cache " + path_.string() + ": " + std::strerror(errno));
        }
        written += static_cast<std::size_t>(n);
    }
}

}  // namespace equitab
