#pragma once
// Locations of on-disk test inputs. IRL_FIXTURES_DIR is injected by the
// build so test binaries run from any working directory.

#include <cstdio>
#include <fstream>
#include <string>

namespace testsupport {

inline std::string fixture(const std::string& name) {
    return std::string(IRL_FIXTURES_DIR) + "/" + name;
}

// A file created under the working directory and deleted on scope exit.
// ctest runs the binaries serially, so simple names do not collide.
class TempFile {
public:
    explicit TempFile(std::string name, const std::string& content = "")
        : path_(std::move(name)) {
        if (!content.empty()) write(content);
    }
    ~TempFile() { std::remove(path_.c_str()); }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    void write(const std::string& content) {
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        out << content;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace testsupport
