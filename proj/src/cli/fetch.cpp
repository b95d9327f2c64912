#include "asmtree/cli/fetch.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <httplib.h>

namespace asmtree::cli {

std::filesystem::path fetch_bfile(const std::string& base_url, const std::string& a_number,
                                  const std::filesystem::path& dest_dir) {
  const bool well_formed = a_number.size() == 7 && a_number[0] == 'A' &&
                           std::all_of(a_number.begin() + 1, a_number.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
  if (!well_formed) throw FetchError("not a sequence id: " + a_number);
  const std::string file_name = "b" + a_number.substr(1) + ".txt";
  const auto local = dest_dir / file_name;
  if (std::filesystem::exists(local)) return local;

  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) throw FetchError("base URL needs a scheme: " + base_url);
  const auto path_start = base_url.find('/', scheme_end + 3);
  const std::string origin = base_url.substr(0, path_start);
  std::string prefix = path_start == std::string::npos ? "" : base_url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const std::string remote = prefix + "/" + a_number + "/" + file_name;
  auto res = client.Get(remote);
  if (!res) throw FetchError("request for " + origin + remote + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw FetchError("request for " + origin + remote + " returned HTTP " + std::to_string(res->status));
  }

  std::error_code ec;
  std::filesystem::create_directories(dest_dir, ec);
  const auto tmp = local.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write " + tmp);
    out << res->body;
  }
  std::filesystem::rename(tmp, local);
  return local;
}

}  // namespace asmtree::cli
