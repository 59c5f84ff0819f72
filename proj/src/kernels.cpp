#include "bellopt/kernels.hpp"

#include <cstdio>
#include <cstdlib>

namespace bellopt::kernels {

const Backend* avx2_backend();  // kernels_avx2.cpp; null when unsupported

const Backend* find_backend(std::string_view name) {
  if (name == "scalar") return &scalar_backend();
  if (name == "avx2") return avx2_backend();
  return nullptr;
}

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> list{&scalar_backend()};
  if (const Backend* b = avx2_backend()) list.push_back(b);
  return list;
}

namespace {

const Backend& select_backend() {
  if (const char* env = std::getenv("BELLOPT_KERNEL")) {
    if (const Backend* b = find_backend(env)) return *b;
    std::fprintf(stderr,
                 "bellopt: BELLOPT_KERNEL=%s is unknown or unsupported on "
                 "this CPU; using scalar kernels\n",
                 env);
    return scalar_backend();
  }
  if (const Backend* b = avx2_backend()) return *b;
  return scalar_backend();
}

}  // namespace

const Backend& active_backend() {
  static const Backend& backend = select_backend();
  return backend;
}

}  // namespace bellopt::kernels
