#pragma once

#include "cosec/gen.hpp"

namespace fx {

inline cosec::Graph path(std::size_t n) { return cosec::gen_family({cosec::Family::Path, n, {}}); }
inline cosec::Graph cycle(std::size_t n) { return cosec::gen_family({cosec::Family::Cycle, n, {}}); }
inline cosec::Graph complete(std::size_t n) { return cosec::gen_family({cosec::Family::Complete, n, {}}); }
inline cosec::Graph kab(std::size_t a, std::size_t b) {
  return cosec::gen_family({cosec::Family::CompleteBipartite, 0, {a, b}});
}

inline cosec::VertexSet set(std::size_t n, std::initializer_list<cosec::Vertex> v) { return cosec::VertexSet(n, v); }

}  // namespace fx
