#include <ramsey/parallel.hh>

#include <cstdlib>
#include <string>

namespace ramsey
{
    auto default_jobs() -> unsigned
    {
        if (const char * env = std::getenv("RAMSEY_WB_JOBS")) {
            try {
                std::size_t used = 0;
                long jobs = std::stol(env, &used);
                if (used == std::string(env).size() && jobs > 0)
                    return unsigned(jobs);
            }
            catch (const std::exception &) {
            }
        }
        unsigned hardware = std::thread::hardware_concurrency();
        return hardware ? hardware : 1;
    }
}
