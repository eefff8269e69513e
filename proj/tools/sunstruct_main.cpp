#include <sunstruct/runconfig.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    sunstruct::RunConfig cfg;
    try {
        cfg = sunstruct::parse_run_config(args);
    } catch (const sunstruct::ConfigError& e) {
        (e.exit_code == 0 ? std::cout : std::cerr) << e.what() << '\n';
        return e.exit_code;
    }

    try {
        if (cfg.mode == sunstruct::RunMode::check ||
            cfg.output_path == "-") {
            return sunstruct::run(cfg, std::cout, std::cerr);
        }
        std::ofstream file(cfg.output_path,
                           std::ios::out | std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.output_path
                      << " for writing\n";
            return 2;
        }
        const int rc = sunstruct::run(cfg, file, std::cerr);
        file.flush();
        if (!file) {
            std::cerr << "error: write to " << cfg.output_path << " failed\n";
            return 2;
        }
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
