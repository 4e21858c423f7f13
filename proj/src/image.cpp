#include "projinv/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "projinv/relative.hpp"
#include "projinv/rng.hpp"

namespace projinv {

double GrayImage::at(int x, int y) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return data[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
}

double GrayImage::sample(double x, double y) const {
    x = std::clamp(x, 0.0, static_cast<double>(width - 1));
    y = std::clamp(y, 0.0, static_cast<double>(height - 1));
    const int x0 = std::min(static_cast<int>(std::floor(x)), width - 2 >= 0 ? width - 2 : 0);
    const int y0 = std::min(static_cast<int>(std::floor(y)), height - 2 >= 0 ? height - 2 : 0);
    const double fx = x - x0;
    const double fy = y - y0;
    const double v00 = at(x0, y0), v10 = at(x0 + 1, y0);
    const double v01 = at(x0, y0 + 1), v11 = at(x0 + 1, y0 + 1);
    return (1 - fy) * ((1 - fx) * v00 + fx * v10) + fy * ((1 - fx) * v01 + fx * v11);
}

namespace {

int read_pnm_token(std::istream& in) {
    // skips whitespace and '#' comments
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    if (!(in >> value)) throw IoFailure("malformed PGM header token");
    return value;
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5') throw IoFailure("expected binary PGM (P5): " + path);

    GrayImage img;
    img.width = read_pnm_token(in);
    img.height = read_pnm_token(in);
    const int maxval = read_pnm_token(in);
    if (img.width <= 0 || img.height <= 0 || maxval <= 0 || maxval > 65535) {
        throw IoFailure("unsupported PGM geometry in " + path);
    }
    in.get();  // single whitespace after maxval

    const std::size_t count = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    img.data.resize(count);
    if (maxval < 256) {
        std::vector<unsigned char> raw(count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
        if (!in) throw IoFailure("truncated PGM payload in " + path);
        for (std::size_t i = 0; i < count; ++i) img.data[i] = raw[i] / static_cast<double>(maxval);
    } else {
        std::vector<unsigned char> raw(count * 2);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count * 2));
        if (!in) throw IoFailure("truncated PGM payload in " + path);
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
            img.data[i] = v / static_cast<double>(maxval);
        }
    }
    return img;
}

void save_pgm(const GrayImage& img, const std::string& path, int bits) {
    if (bits != 8 && bits != 16) throw IoFailure("PGM depth must be 8 or 16 bits");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write " + path);
    const int maxval = bits == 8 ? 255 : 65535;
    out << "P5\n" << img.width << " " << img.height << "\n" << maxval << "\n";
    for (double v : img.data) {
        const long q = std::lround(std::clamp(v, 0.0, 1.0) * maxval);
        if (bits == 8) {
            out.put(static_cast<char>(q));
        } else {
            out.put(static_cast<char>((q >> 8) & 0xFF));
            out.put(static_cast<char>(q & 0xFF));
        }
    }
    if (!out) throw IoFailure("short write to " + path);
}

JetConfiguration sobel_jet(const GrayImage& img, const std::vector<PixelPoint>& pts) {
    std::vector<JetBlock> blocks;
    blocks.reserve(pts.size());
    for (const PixelPoint& pt : pts) {
        const double x = pt[0];
        const double y = pt[1];
        if (x - 1.0 < 0.0 || x + 1.0 > img.width - 1 || y - 1.0 < 0.0 || y + 1.0 > img.height - 1) {
            throw OutOfBounds("sample point too close to the border");
        }
        double gx = 0.0;
        double gy = 0.0;
        static constexpr double w[3] = {1.0, 2.0, 1.0};
        for (int d = -1; d <= 1; ++d) {
            gx += w[d + 1] * (img.sample(x + 1, y + d) - img.sample(x - 1, y + d));
            gy += w[d + 1] * (img.sample(x + d, y + 1) - img.sample(x + d, y - 1));
        }
        blocks.push_back(JetBlock{x, y, gx / 8.0, gy / 8.0});
    }
    return JetConfiguration(std::move(blocks));
}

FeatureSample feature_at(const GrayImage& img, const std::vector<PixelPoint>& pts) {
    JetConfiguration cfg = sobel_jet(img, pts);
    if (!check_general_position(cfg).passes) {
        throw NotInGeneralPosition("estimated configuration is degenerate");
    }
    FeatureSample out{cfg, generating_set(cfg), invariantized_jacobian(cfg)};
    return out;
}

double mc_weight_integrand(const JetConfiguration& cfg, const std::vector<double>& u_values) {
    if (static_cast<int>(u_values.size()) != cfg.size()) {
        throw InvalidConfiguration("u_values length must match configuration size");
    }
    double prod = 1.0;
    for (double u : u_values) prod *= u;
    return invariantized_jacobian(cfg) * prod;
}

bool mc_sample_degenerate(const JetConfiguration& cfg) {
    if (!check_general_position(cfg).passes) return true;
    try {
        (void)invariantized_jacobian(cfg);
    } catch (const Error&) {
        return true;
    }
    return false;
}

McReport mc_descriptor(const GrayImage& img, int n, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidConfiguration("samples must be >= 1");
    McReport report;
    report.samples = samples;

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t s = 0; s < samples; ++s) {
        RngStream rng = RngStream::from_seed(seed, {0x4D43696EULL, static_cast<std::uint64_t>(s)});
        std::vector<PixelPoint> pts(static_cast<std::size_t>(n));
        std::vector<double> u(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            pts[static_cast<std::size_t>(i)] = {rng.uniform(1.0, img.width - 2.0),
                                                rng.uniform(1.0, img.height - 2.0)};
        }
        const JetConfiguration cfg = sobel_jet(img, pts);
        for (int i = 0; i < n; ++i) {
            u[static_cast<std::size_t>(i)] = img.sample(pts[static_cast<std::size_t>(i)][0],
                                                        pts[static_cast<std::size_t>(i)][1]);
        }
        if (mc_sample_degenerate(cfg)) {
            ++report.skipped;
            continue;
        }
        const double value = mc_weight_integrand(cfg, u);
        ++report.accepted;
        sum += value;
        sum_sq += value * value;
    }
    if (report.accepted > 0) {
        const double mean = sum / static_cast<double>(report.accepted);
        report.estimate = mean;
        if (report.accepted > 1) {
            const double var = std::max(0.0, (sum_sq - sum * mean) / static_cast<double>(report.accepted - 1));
            report.stderr_estimate = std::sqrt(var / static_cast<double>(report.accepted));
        }
    }
    return report;
}

GrayImage warp_image(const GrayImage& img, const Homography& g) {
    const Homography ginv = g.inverse();
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.data.resize(img.data.size());
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double v = 0.0;
            try {
                const std::array<double, 2> src = act_point(ginv, {static_cast<double>(x), static_cast<double>(y)});
                v = img.sample(src[0], src[1]);
            } catch (const DenominatorNearZero&) {
                v = 0.0;  // pixel maps through the line at infinity
            }
            out.data[static_cast<std::size_t>(y) * static_cast<std::size_t>(out.width) + static_cast<std::size_t>(x)] = v;
        }
    }
    return out;
}

Homography conjugate_to_pixels(const Homography& unit_g, int width, int height) {
    Eigen::Matrix3d to_unit;
    to_unit << 2.0 / (width - 1), 0.0, -1.0, 0.0, 2.0 / (height - 1), -1.0, 0.0, 0.0, 1.0;
    const Eigen::Matrix3d m = to_unit.inverse() * unit_g.matrix() * to_unit;
    return Homography(m);
}

double GaussianBlobField::value(double x, double y) const {
    double v = 0.0;
    for (const Blob& b : blobs) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        v += b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
    }
    return v;
}

std::array<double, 2> GaussianBlobField::gradient(double x, double y) const {
    double gx = 0.0;
    double gy = 0.0;
    for (const Blob& b : blobs) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        const double e = b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
        gx += -dx / (b.sigma * b.sigma) * e;
        gy += -dy / (b.sigma * b.sigma) * e;
    }
    return {gx, gy};
}

JetBlock GaussianBlobField::jet_at(double x, double y) const {
    const std::array<double, 2> g = gradient(x, y);
    return JetBlock{x, y, g[0], g[1]};
}

GrayImage GaussianBlobField::render(int width, int height) const {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.data.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            img.data[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)] =
                std::clamp(value(x, y), 0.0, 1.0);
        }
    }
    return img;
}

}  // namespace projinv
