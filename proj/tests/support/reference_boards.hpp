// Published reference leaderboards and weightings the scoring engine is
// calibrated against.  Generated data: do not edit by hand.
#pragma once

#include <array>
#include <string_view>

namespace refboards {

struct Row {
    std::string_view system;
    std::string_view hardware;
    double score;
};

struct WeightTriple {
    double accuracy;
    double latency;
    double cost;
};

inline constexpr WeightTriple weights_default{0.5, 0.25, 0.25};
inline constexpr WeightTriple weights_acc90{0.9, 0.05, 0.05};
inline constexpr WeightTriple weights_lat24{0.75, 0.24, 0.01};
inline constexpr WeightTriple weights_cost40{0.4, 0.2, 0.4};

inline constexpr std::array<Row, 28> msmarco_default{{
    {"ColBERTv2-M", "16 CPU, 32 GB memory", 19.127},
    {"ColBERTv2-S", "16 CPU, 32 GB memory", 19.118},
    {"ColBERTv2-L", "16 CPU, 32 GB memory", 18.857},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 32 GB memory", 18.698},
    {"BT-SPLADE-L", "16 CPU, 32 GB memory", 18.637},
    {"BT-SPLADE-L", "1 CPU, 32 GB memory", 18.616},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 32 GB memory", 18.385},
    {"ColBERTv2-S", "1 CPU, 32 GB memory", 17.912},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 32 GB memory", 17.839},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 32 GB memory", 17.331},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 32 GB memory", 17.080},
    {"ColBERTv2-M", "1 CPU, 32 GB memory", 17.060},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 32 GB memory", 16.619},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 32 GB memory", 16.062},
    {"ColBERTv2-L", "1 CPU, 32 GB memory", 15.858},
    {"DPR", "16 CPU, 32 GB memory", 15.635},
    {"DPR", "1 GPU, 1 CPU, 32 GB memory", 15.330},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 32 GB memory", 14.940},
    {"DPR", "1 CPU, 32 GB memory", 14.583},
    {"DPR", "1 GPU, 16 CPU, 32 GB memory", 14.252},
    {"BM25", "1 CPU, 4 GB memory", 9.263},
    {"BM25", "1 CPU, 32 GB memory", 9.263},
    {"BM25", "16 CPU, 32 GB memory", 9.248},
    {"BM25", "16 CPU, 4 GB memory", 9.246},
    {"BM25", "1 GPU, 1 CPU, 32 GB memory", 9.072},
    {"BM25", "1 GPU, 1 CPU, 4 GB memory", 9.049},
    {"BM25", "1 GPU, 16 CPU, 32 GB memory", 8.565},
    {"BM25", "1 GPU, 16 CPU, 4 GB memory", 8.551},
}};

inline constexpr std::array<Row, 28> msmarco_acc90{{
    {"ColBERTv2-M", "16 CPU, 32 GB memory", 35.577},
    {"ColBERTv2-L", "16 CPU, 32 GB memory", 35.515},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 32 GB memory", 35.429},
    {"ColBERTv2-S", "16 CPU, 32 GB memory", 35.344},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 32 GB memory", 35.260},
    {"ColBERTv2-M", "1 CPU, 32 GB memory", 35.164},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 32 GB memory", 35.160},
    {"ColBERTv2-S", "1 CPU, 32 GB memory", 35.102},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 32 GB memory", 35.076},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 32 GB memory", 34.986},
    {"ColBERTv2-L", "1 CPU, 32 GB memory", 34.916},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 32 GB memory", 34.732},
    {"BT-SPLADE-L", "16 CPU, 32 GB memory", 34.151},
    {"BT-SPLADE-L", "1 CPU, 32 GB memory", 34.147},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 32 GB memory", 33.992},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 32 GB memory", 33.636},
    {"DPR", "16 CPU, 32 GB memory", 28.487},
    {"DPR", "1 GPU, 1 CPU, 32 GB memory", 28.426},
    {"DPR", "1 CPU, 32 GB memory", 28.277},
    {"DPR", "1 GPU, 16 CPU, 32 GB memory", 28.210},
    {"BM25", "1 CPU, 4 GB memory", 16.813},
    {"BM25", "1 CPU, 32 GB memory", 16.813},
    {"BM25", "16 CPU, 32 GB memory", 16.810},
    {"BM25", "16 CPU, 4 GB memory", 16.809},
    {"BM25", "1 GPU, 1 CPU, 32 GB memory", 16.774},
    {"BM25", "1 GPU, 1 CPU, 4 GB memory", 16.770},
    {"BM25", "1 GPU, 16 CPU, 32 GB memory", 16.673},
    {"BM25", "1 GPU, 16 CPU, 4 GB memory", 16.670},
}};

inline constexpr std::array<Row, 28> msmarco_lat24{{
    {"ColBERTv2-M", "1 GPU, 16 CPU, 32 GB memory", 29.388},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 32 GB memory", 29.347},
    {"ColBERTv2-M", "16 CPU, 32 GB memory", 29.300},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 32 GB memory", 29.267},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 32 GB memory", 29.259},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 32 GB memory", 29.181},
    {"ColBERTv2-S", "16 CPU, 32 GB memory", 29.172},
    {"ColBERTv2-L", "16 CPU, 32 GB memory", 29.122},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 32 GB memory", 28.961},
    {"BT-SPLADE-L", "16 CPU, 32 GB memory", 28.278},
    {"BT-SPLADE-L", "1 CPU, 32 GB memory", 28.186},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 32 GB memory", 28.183},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 32 GB memory", 28.175},
    {"ColBERTv2-S", "1 CPU, 32 GB memory", 28.045},
    {"ColBERTv2-M", "1 CPU, 32 GB memory", 27.422},
    {"ColBERTv2-L", "1 CPU, 32 GB memory", 26.407},
    {"DPR", "16 CPU, 32 GB memory", 23.634},
    {"DPR", "1 GPU, 1 CPU, 32 GB memory", 23.622},
    {"DPR", "1 GPU, 16 CPU, 32 GB memory", 23.586},
    {"DPR", "1 CPU, 32 GB memory", 22.708},
    {"BM25", "16 CPU, 32 GB memory", 13.958},
    {"BM25", "16 CPU, 4 GB memory", 13.958},
    {"BM25", "1 CPU, 32 GB memory", 13.952},
    {"BM25", "1 CPU, 4 GB memory", 13.945},
    {"BM25", "1 GPU, 1 CPU, 32 GB memory", 13.944},
    {"BM25", "1 GPU, 1 CPU, 4 GB memory", 13.936},
    {"BM25", "1 GPU, 16 CPU, 32 GB memory", 13.931},
    {"BM25", "1 GPU, 16 CPU, 4 GB memory", 13.930},
}};

inline constexpr std::array<Row, 28> msmarco_cost40{{
    {"ColBERTv2-S", "16 CPU, 32 GB memory", 15.138},
    {"ColBERTv2-M", "16 CPU, 32 GB memory", 15.108},
    {"BT-SPLADE-L", "1 CPU, 32 GB memory", 14.851},
    {"ColBERTv2-L", "16 CPU, 32 GB memory", 14.820},
    {"BT-SPLADE-L", "16 CPU, 32 GB memory", 14.806},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 32 GB memory", 14.375},
    {"ColBERTv2-S", "1 CPU, 32 GB memory", 14.146},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 32 GB memory", 13.855},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 32 GB memory", 13.584},
    {"ColBERTv2-M", "1 CPU, 32 GB memory", 13.363},
    {"DPR", "16 CPU, 32 GB memory", 12.451},
    {"ColBERTv2-L", "1 CPU, 32 GB memory", 12.278},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 32 GB memory", 12.132},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 32 GB memory", 12.055},
    {"DPR", "1 GPU, 1 CPU, 32 GB memory", 11.962},
    {"DPR", "1 CPU, 32 GB memory", 11.537},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 32 GB memory", 10.932},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 32 GB memory", 10.687},
    {"DPR", "1 GPU, 16 CPU, 32 GB memory", 10.231},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 32 GB memory", 8.365},
    {"BM25", "1 CPU, 4 GB memory", 7.408},
    {"BM25", "1 CPU, 32 GB memory", 7.401},
    {"BM25", "16 CPU, 32 GB memory", 7.371},
    {"BM25", "16 CPU, 4 GB memory", 7.369},
    {"BM25", "1 GPU, 1 CPU, 32 GB memory", 7.095},
    {"BM25", "1 GPU, 1 CPU, 4 GB memory", 7.065},
    {"BM25", "1 GPU, 16 CPU, 32 GB memory", 6.278},
    {"BM25", "1 GPU, 16 CPU, 4 GB memory", 6.256},
}};

inline constexpr std::array<Row, 24> xor_default{{
    {"ColBERTv2-L", "16 CPU, 64 GB memory", 21.241},
    {"BT-SPLADE-L", "16 CPU, 64 GB memory", 21.119},
    {"ColBERTv2-M", "16 CPU, 64 GB memory", 21.063},
    {"BT-SPLADE-L", "1 CPU, 64 GB memory", 20.753},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 64 GB memory", 20.255},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 64 GB memory", 20.123},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 64 GB memory", 19.904},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 64 GB memory", 19.700},
    {"ColBERTv2-S", "16 CPU, 64 GB memory", 19.649},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 64 GB memory", 19.380},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 64 GB memory", 19.157},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 64 GB memory", 19.123},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 64 GB memory", 18.723},
    {"ColBERTv2-S", "1 CPU, 64 GB memory", 15.934},
    {"BM25", "1 CPU, 64 GB memory", 12.635},
    {"BM25", "16 CPU, 64 GB memory", 12.630},
    {"BM25", "1 GPU, 16 CPU, 64 GB memory", 11.847},
    {"BM25", "1 GPU, 1 CPU, 64 GB memory", 11.794},
    {"ColBERTv2-M", "1 CPU, 64 GB memory", 11.563},
    {"ColBERTv2-L", "1 CPU, 64 GB memory", 7.708},
    {"DPR", "1 GPU, 1 CPU, 64 GB memory", 7.452},
    {"DPR", "1 GPU, 16 CPU, 64 GB memory", 7.386},
    {"DPR", "16 CPU, 64 GB memory", 7.188},
    {"DPR", "1 CPU, 64 GB memory", 5.442},
}};

inline constexpr std::array<Row, 24> xor_acc90{{
    {"ColBERTv2-L", "16 CPU, 64 GB memory", 42.200},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 64 GB memory", 41.892},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 64 GB memory", 41.777},
    {"ColBERTv2-M", "16 CPU, 64 GB memory", 40.557},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 64 GB memory", 40.395},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 64 GB memory", 40.325},
    {"ColBERTv2-L", "1 CPU, 64 GB memory", 39.494},
    {"BT-SPLADE-L", "16 CPU, 64 GB memory", 39.048},
    {"BT-SPLADE-L", "1 CPU, 64 GB memory", 38.975},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 64 GB memory", 38.849},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 64 GB memory", 38.700},
    {"ColBERTv2-M", "1 CPU, 64 GB memory", 38.657},
    {"ColBERTv2-S", "16 CPU, 64 GB memory", 37.362},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 64 GB memory", 37.263},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 64 GB memory", 37.177},
    {"ColBERTv2-S", "1 CPU, 64 GB memory", 36.619},
    {"BM25", "1 CPU, 64 GB memory", 23.599},
    {"BM25", "16 CPU, 64 GB memory", 23.598},
    {"BM25", "1 GPU, 16 CPU, 64 GB memory", 23.441},
    {"BM25", "1 GPU, 1 CPU, 64 GB memory", 23.431},
    {"DPR", "1 GPU, 1 CPU, 64 GB memory", 15.010},
    {"DPR", "1 GPU, 16 CPU, 64 GB memory", 14.997},
    {"DPR", "16 CPU, 64 GB memory", 14.958},
    {"DPR", "1 CPU, 64 GB memory", 14.608},
}};

inline constexpr std::array<Row, 24> xor_lat24{{
    {"ColBERTv2-L", "1 GPU, 16 CPU, 64 GB memory", 34.073},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 64 GB memory", 33.859},
    {"ColBERTv2-L", "16 CPU, 64 GB memory", 33.385},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 64 GB memory", 33.149},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 64 GB memory", 33.020},
    {"ColBERTv2-M", "16 CPU, 64 GB memory", 32.609},
    {"BT-SPLADE-L", "16 CPU, 64 GB memory", 32.076},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 64 GB memory", 32.036},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 64 GB memory", 31.752},
    {"BT-SPLADE-L", "1 CPU, 64 GB memory", 31.718},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 64 GB memory", 30.689},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 64 GB memory", 30.532},
    {"ColBERTv2-S", "16 CPU, 64 GB memory", 30.239},
    {"ColBERTv2-S", "1 CPU, 64 GB memory", 26.788},
    {"ColBERTv2-M", "1 CPU, 64 GB memory", 23.835},
    {"ColBERTv2-L", "1 CPU, 64 GB memory", 20.881},
    {"BM25", "16 CPU, 64 GB memory", 19.276},
    {"BM25", "1 CPU, 64 GB memory", 19.264},
    {"BM25", "1 GPU, 16 CPU, 64 GB memory", 19.258},
    {"BM25", "1 GPU, 1 CPU, 64 GB memory", 19.243},
    {"DPR", "1 GPU, 1 CPU, 64 GB memory", 12.305},
    {"DPR", "1 GPU, 16 CPU, 64 GB memory", 12.277},
    {"DPR", "16 CPU, 64 GB memory", 11.558},
    {"DPR", "1 CPU, 64 GB memory", 9.913},
}};

inline constexpr std::array<Row, 24> xor_cost40{{
    {"BT-SPLADE-L", "16 CPU, 64 GB memory", 16.853},
    {"ColBERTv2-L", "16 CPU, 64 GB memory", 16.832},
    {"ColBERTv2-M", "16 CPU, 64 GB memory", 16.743},
    {"BT-SPLADE-L", "1 CPU, 64 GB memory", 16.565},
    {"ColBERTv2-S", "16 CPU, 64 GB memory", 15.638},
    {"BT-SPLADE-L", "1 GPU, 16 CPU, 64 GB memory", 15.259},
    {"ColBERTv2-M", "1 GPU, 16 CPU, 64 GB memory", 14.954},
    {"ColBERTv2-M", "1 GPU, 1 CPU, 64 GB memory", 14.491},
    {"ColBERTv2-S", "1 GPU, 16 CPU, 64 GB memory", 14.444},
    {"BT-SPLADE-L", "1 GPU, 1 CPU, 64 GB memory", 14.291},
    {"ColBERTv2-S", "1 GPU, 1 CPU, 64 GB memory", 13.871},
    {"ColBERTv2-L", "1 GPU, 16 CPU, 64 GB memory", 13.714},
    {"ColBERTv2-L", "1 GPU, 1 CPU, 64 GB memory", 12.958},
    {"ColBERTv2-S", "1 CPU, 64 GB memory", 12.566},
    {"BM25", "1 CPU, 64 GB memory", 10.088},
    {"BM25", "16 CPU, 64 GB memory", 10.069},
    {"ColBERTv2-M", "1 CPU, 64 GB memory", 8.843},
    {"BM25", "1 GPU, 16 CPU, 64 GB memory", 8.806},
    {"BM25", "1 GPU, 1 CPU, 64 GB memory", 8.731},
    {"DPR", "16 CPU, 64 GB memory", 5.669},
    {"ColBERTv2-L", "1 CPU, 64 GB memory", 5.582},
    {"DPR", "1 GPU, 1 CPU, 64 GB memory", 5.450},
    {"DPR", "1 GPU, 16 CPU, 64 GB memory", 5.368},
    {"DPR", "1 CPU, 64 GB memory", 4.244},
}};

}  // namespace refboards
