#include "weilcensus/cli.hpp"

#include "weilcensus/orders.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace weilcensus {

namespace {

bool parse_line(const std::string& line, std::int64_t& D, std::int64_t& h) {
  const auto sp = line.find(' ');
  if (sp == std::string::npos) return false;
  const char* b = line.data();
  auto r1 = std::from_chars(b, b + sp, D);
  if (r1.ec != std::errc() || r1.ptr != b + sp) return false;
  auto r2 = std::from_chars(b + sp + 1, b + line.size(), h);
  return r2.ec == std::errc() && r2.ptr == b + line.size();
}

std::int64_t conductor_route(std::int64_t D) {
  const auto [d_K, c] = quadratic_decompose(D);
  return class_number_conductor_formula(d_K, c);
}

}  // namespace

ClassNumberCache::ClassNumberCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::int64_t D = 0, h = 0;
    const std::string where = path_.string() + ":" + std::to_string(lineno);
    if (!parse_line(line, D, h) || D >= 0 || !is_quadratic_discriminant(D) || h < 1) {
      warnings_.push_back(where + ": unparsable cache line '" + line + "' ignored");
      dirty_ = true;
      continue;
    }
    if (conductor_route(D) != h) {
      warnings_.push_back(where + ": cached h(" + std::to_string(D) + ") = " + std::to_string(h) +
                          " is wrong; it will be recomputed");
      dirty_ = true;
      continue;
    }
    if (!entries_.emplace(-D, h).second) dirty_ = true;
  }
}

std::int64_t ClassNumberCache::get_or_compute(std::int64_t D) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = entries_.find(-D); it != entries_.end()) return it->second;
  }
  const std::int64_t h = class_number_form_count(D);
  const std::int64_t check = conductor_route(D);
  if (h != check)
    throw std::logic_error("class number routes disagree at D = " + std::to_string(D));
  std::lock_guard<std::mutex> lock(mutex_);
  if (entries_.emplace(-D, h).second) {
    ++computed_;
    dirty_ = true;
  }
  return h;
}

void ClassNumberCache::flush() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (path_.empty() || !dirty_) return;
  std::ostringstream body;
  for (const auto& [absD, h] : entries_) body << -absD << ' ' << h << '\n';
  auto tmp = path_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << body.str();
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
  dirty_ = false;
}

std::vector<std::string> ClassNumberCache::warnings() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return warnings_;
}

std::size_t ClassNumberCache::computed() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return computed_;
}

std::size_t ClassNumberCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

}  // namespace weilcensus
