// Writes the builtin instances as data files, then reads each file back and
// runs the checkers on what was read.  Exits nonzero if any file is rejected.
#include <filesystem>
#include <iostream>

#include "waldkit/io.hpp"
#include "waldkit/simpset.hpp"

using namespace waldkit;

namespace {

constexpr int kYCap = 6;

bool check_category(const std::string& path) {
    const FinCofCategory C = load_category(path);
    const ValidationReport base = validate_category(C.base);
    if (!base.ok()) {
        std::cerr << path << ": category laws fail\n" << base.to_string();
        return false;
    }
    const ValidationReport cof = validate_cofibrations(C);
    if (!s_admissible(cof)) {
        std::cerr << path << ": cofibration data unusable\n" << cof.to_string();
        return false;
    }
    std::cout << path << ": laws ok, cofibrations " << (cof.ok() ? "valid" : "S-admissible (pushouts missing)")
              << '\n';
    return true;
}

bool check_Y(const std::string& path) {
    const ValidationReport r = validate_Y(load_Y(path));
    if (!r.ok())
        std::cerr << path << '\n' << r.to_string();
    else
        std::cout << path << ": valid\n";
    return r.ok();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_builtins OUTDIR\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    try {
        std::filesystem::create_directories(dir);
        bool ok = true;
        for (const char* name : {"trivial", "chain2", "chain3", "diamond"}) {
            const auto path = (dir / (std::string(name) + ".cat")).string();
            write_file(path, write_category(builtin_category(name)));
            ok = check_category(path) && ok;
        }
        for (const char* name : {"circle", "const0", "point_plus", "interval_plus"}) {
            const auto path = (dir / (std::string(name) + ".y")).string();
            write_file(path, write_Y(builtin_Y(name, kYCap)));
            ok = check_Y(path) && ok;
        }
        const auto hpath = (dir / "vertex.hom").string();
        write_file(hpath, write_homotopy(vertex_homotopy(kYCap), "point_plus.y", "interval_plus.y"));
        const HomotopyInstance H = read_homotopy(read_file(hpath), hpath, kYCap);
        const ValidationReport hr = validate_homotopy(H.Y, H.Y2, H.f, H.g, H.H);
        if (!hr.ok())
            std::cerr << hpath << '\n' << hr.to_string();
        else
            std::cout << hpath << ": valid\n";
        ok = ok && hr.ok();
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "gen_builtins: " << e.what() << '\n';
        return 2;
    }
}
