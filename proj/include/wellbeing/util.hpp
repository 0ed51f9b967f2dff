#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace wellbeing {

/// Runs fn(i) for i in [0, n) across up to `threads` workers (0 = hardware
/// count). Work is split into contiguous blocks; fn must be safe to call
/// concurrently for distinct i.
void parallel_for(int n, const std::function<void(int)>& fn, int threads = 0);

/// FNV-1a over raw bytes; used for content digests.
std::uint64_t fnv1a(const void* data, std::size_t len,
                    std::uint64_t h = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t v);

}  // namespace wellbeing
