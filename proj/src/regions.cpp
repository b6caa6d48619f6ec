#include "texdesc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "texdesc/glcm.hpp"
#include "texdesc/spectral.hpp"

namespace texdesc {

namespace {

bool is_ring_base(DescriptorBase base) {
    return base == DescriptorBase::Lbp || base == DescriptorBase::RiLbp ||
           base == DescriptorBase::Wld || base == DescriptorBase::Wldri;
}

std::string base_name(const DescriptorConfig& cfg) {
    switch (cfg.base) {
        case DescriptorBase::Lbp: return cfg.fuse_weber ? "WeberLBP" : "LBP";
        case DescriptorBase::RiLbp: return cfg.fuse_weber ? "riWeberLBP" : "riLBP";
        case DescriptorBase::Wld: return "WLD";
        case DescriptorBase::Wldri: return "WLDRI";
        case DescriptorBase::Glcm: return "GLCM";
        case DescriptorBase::Dct: return "DCT";
        case DescriptorBase::Dft: return "DFT";
    }
    return "?";
}

void validate_config(const DescriptorConfig& cfg) {
    if (cfg.fuse_weber && cfg.base != DescriptorBase::Lbp && cfg.base != DescriptorBase::RiLbp)
        throw InvalidArgument("Weber fusion applies to the LBP bases only");
    if (is_ring_base(cfg.base) && cfg.scales.empty())
        throw InvalidArgument("ring descriptors need at least one (P,R) scale");
    if (cfg.wld_q.excitation_bins < 1 || cfg.wld_q.orientation_bins < 1)
        throw InvalidArgument("WLD bin counts must be positive");
}

std::size_t wld_dim(const DescriptorConfig& cfg) {
    return static_cast<std::size_t>(cfg.wld_q.excitation_bins) * cfg.wld_q.orientation_bins;
}

std::size_t single_scale_dim(const DescriptorConfig& cfg, const NeighborhoodSpec& scale) {
    std::size_t d = 0;
    switch (cfg.base) {
        case DescriptorBase::Lbp: d = lbp_histogram_size(scale.P, LbpVariant::U2); break;
        case DescriptorBase::RiLbp: d = lbp_histogram_size(scale.P, LbpVariant::RIU2); break;
        case DescriptorBase::Wld:
        case DescriptorBase::Wldri: d = wld_dim(cfg); break;
        default: return 0;
    }
    if (cfg.fuse_weber)
        d += wld_dim(cfg);
    return d;
}

double max_radius(const DescriptorConfig& cfg) {
    double r = 0.0;
    for (const auto& s : cfg.scales)
        r = std::max(r, s.R);
    return r;
}

// Whole-image feature block (no cog handling).
void extract_block(const GrayImage& img, const DescriptorConfig& cfg,
                   std::vector<double>* out) {
    switch (cfg.base) {
        case DescriptorBase::Glcm: {
            const auto fv = glcm_feature_vector(img, cfg.glcm_distance, cfg.glcm_levels);
            out->insert(out->end(), fv.values.begin(), fv.values.end());
            return;
        }
        case DescriptorBase::Dct: {
            const auto fv = dct_features(img, cfg.spectral_k);
            out->insert(out->end(), fv.values.begin(), fv.values.end());
            return;
        }
        case DescriptorBase::Dft: {
            const auto fv = dft_features(img, cfg.spectral_k);
            out->insert(out->end(), fv.values.begin(), fv.values.end());
            return;
        }
        default: break;
    }
    for (const auto& scale : cfg.scales) {
        FeatureVector fv;
        switch (cfg.base) {
            case DescriptorBase::Lbp: fv = lbp_histogram(img, scale, LbpVariant::U2); break;
            case DescriptorBase::RiLbp: fv = lbp_histogram(img, scale, LbpVariant::RIU2); break;
            case DescriptorBase::Wld: fv = wld_histogram(img, scale, cfg.wld_q, false); break;
            case DescriptorBase::Wldri: fv = wld_histogram(img, scale, cfg.wld_q, true); break;
            default: break;
        }
        out->insert(out->end(), fv.values.begin(), fv.values.end());
        if (cfg.fuse_weber) {
            const bool ri = cfg.base == DescriptorBase::RiLbp;
            const auto wld = wld_histogram(img, scale, cfg.wld_q, ri);
            out->insert(out->end(), wld.values.begin(), wld.values.end());
        }
    }
}

}  // namespace

std::string DescriptorConfig::to_string() const {
    std::string s = cog ? "cog" : "";
    s += base_name(*this);
    if (is_ring_base(base)) {
        s += "@";
        for (std::size_t i = 0; i < scales.size(); ++i) {
            if (i) s += "+";
            s += scale_string(scales[i]);
        }
    } else if (base == DescriptorBase::Glcm) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "@d%d,l%d", glcm_distance, glcm_levels);
        s += buf;
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "@k%zu", spectral_k);
        s += buf;
    }
    return s;
}

DescriptorConfig DescriptorConfig::parse(const std::string& text) {
    DescriptorConfig cfg;
    cfg.scales.clear();
    std::string rest = text;

    if (rest.rfind("cog", 0) == 0) {
        cfg.cog = true;
        rest = rest.substr(3);
    }

    const auto at = rest.find('@');
    const std::string name = rest.substr(0, at);
    const std::string params = at == std::string::npos ? "" : rest.substr(at + 1);

    if (name == "LBP") {
        cfg.base = DescriptorBase::Lbp;
    } else if (name == "riLBP") {
        cfg.base = DescriptorBase::RiLbp;
    } else if (name == "WeberLBP") {
        cfg.base = DescriptorBase::Lbp;
        cfg.fuse_weber = true;
    } else if (name == "riWeberLBP") {
        cfg.base = DescriptorBase::RiLbp;
        cfg.fuse_weber = true;
    } else if (name == "WLD") {
        cfg.base = DescriptorBase::Wld;
    } else if (name == "WLDRI") {
        cfg.base = DescriptorBase::Wldri;
    } else if (name == "GLCM") {
        cfg.base = DescriptorBase::Glcm;
    } else if (name == "DCT") {
        cfg.base = DescriptorBase::Dct;
    } else if (name == "DFT") {
        cfg.base = DescriptorBase::Dft;
    } else {
        throw ParseError("unknown descriptor name: " + name);
    }

    if (is_ring_base(cfg.base)) {
        std::string list = params.empty() ? "8,1+16,2+24,3" : params;
        std::size_t pos = 0;
        while (pos < list.size()) {
            const auto plus = list.find('+', pos);
            const std::string item =
                list.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
            int P = 0;
            double R = 0.0;
            if (std::sscanf(item.c_str(), "%d,%lf", &P, &R) != 2)
                throw ParseError("bad scale '" + item + "' in " + text);
            cfg.scales.push_back({P, R});
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
        if (cfg.scales.empty())
            throw ParseError("no scales in " + text);
    } else if (cfg.base == DescriptorBase::Glcm) {
        if (!params.empty() &&
            std::sscanf(params.c_str(), "d%d,l%d", &cfg.glcm_distance, &cfg.glcm_levels) != 2)
            throw ParseError("bad GLCM parameters in " + text);
    } else {
        if (!params.empty()) {
            unsigned long k = 0;
            if (std::sscanf(params.c_str(), "k%lu", &k) != 1)
                throw ParseError("bad coefficient count in " + text);
            cfg.spectral_k = k;
        }
    }
    validate_config(cfg);
    return cfg;
}

CogPoint center_of_gravity(const GrayImage& img) {
    if (img.width < 1 || img.height < 1)
        throw InvalidArgument("center of gravity of an empty image");
    double mass = 0.0, mx = 0.0, my = 0.0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double v = img.at(x, y);
            mass += v;
            mx += x * v;
            my += y * v;
        }
    }
    if (mass == 0.0)
        return geometric_center(img);
    return {mx / mass, my / mass};
}

CogPoint geometric_center(const GrayImage& img) {
    return {(img.width - 1) / 2.0, (img.height - 1) / 2.0};
}

std::array<GrayImage, 4> split_quadrants(const GrayImage& img, const CogPoint& c,
                                         int min_side) {
    const int rx = static_cast<int>(std::floor(c.cx + 0.5));
    const int ry = static_cast<int>(std::floor(c.cy + 0.5));
    const int widths[2] = {rx, img.width - rx};
    const int heights[2] = {ry, img.height - ry};
    for (int w : widths)
        if (w < min_side)
            throw DegenerateSplit("quadrant width below " + std::to_string(min_side));
    for (int h : heights)
        if (h < min_side)
            throw DegenerateSplit("quadrant height below " + std::to_string(min_side));
    return {crop(img, {0, 0, widths[0], heights[0]}),
            crop(img, {rx, 0, widths[1], heights[0]}),
            crop(img, {0, ry, widths[0], heights[1]}),
            crop(img, {rx, ry, widths[1], heights[1]})};
}

std::size_t expected_dimension(const DescriptorConfig& cfg) {
    validate_config(cfg);
    std::size_t d = 0;
    switch (cfg.base) {
        case DescriptorBase::Glcm: d = 64; break;
        case DescriptorBase::Dct:
        case DescriptorBase::Dft: d = cfg.spectral_k; break;
        default:
            for (const auto& s : cfg.scales)
                d += single_scale_dim(cfg, s);
            break;
    }
    return (cfg.cog ? 4 : 1) * d;
}

FeatureVector extract(const GrayImage& img, const DescriptorConfig& cfg) {
    validate_config(cfg);
    FeatureVector fv;
    fv.descriptor = cfg.to_string();
    fv.values.reserve(expected_dimension(cfg));
    if (cfg.cog) {
        int min_side = 1;
        if (is_ring_base(cfg.base))
            min_side = 2 * static_cast<int>(std::ceil(max_radius(cfg))) + 2;
        else if (cfg.base == DescriptorBase::Glcm)
            min_side = cfg.glcm_distance + 1;
        const auto quads = split_quadrants(img, center_of_gravity(img), min_side);
        for (const auto& quad : quads)
            extract_block(quad, cfg, &fv.values);
    } else {
        extract_block(img, cfg, &fv.values);
    }
    return fv;
}

std::vector<LedgerRow> dimension_ledger() {
    const std::vector<NeighborhoodSpec> all_scales = {{8, 1.0}, {16, 2.0}, {24, 3.0}};
    const std::vector<std::pair<DescriptorBase, bool>> bases = {
        {DescriptorBase::Lbp, false},  {DescriptorBase::Wld, false},
        {DescriptorBase::RiLbp, false}, {DescriptorBase::Wldri, false},
        {DescriptorBase::Lbp, true},   {DescriptorBase::RiLbp, true},
    };

    std::vector<LedgerRow> rows;
    for (bool cog : {false, true}) {
        for (bool multi_scale : {false, true}) {
            const std::string group = std::string(cog ? "cog" : "") +
                                      (multi_scale ? "multi-scale" : "single-scale");
            for (const auto& [base, fused] : bases) {
                DescriptorConfig cfg;
                cfg.base = base;
                cfg.fuse_weber = fused;
                cfg.cog = cog;
                if (multi_scale) {
                    cfg.scales = all_scales;
                    rows.push_back({group, cfg.to_string(), expected_dimension(cfg)});
                } else {
                    for (const auto& scale : all_scales) {
                        cfg.scales = {scale};
                        rows.push_back({group, cfg.to_string(), expected_dimension(cfg)});
                    }
                }
            }
        }
    }
    return rows;
}

}  // namespace texdesc
