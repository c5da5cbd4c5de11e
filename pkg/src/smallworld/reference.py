"""Published measurements of the regional Facebook social and interaction graphs.

The graphs themselves are not redistributable, so these numbers cannot be
recomputed here. They are kept as documentation and for checks that only need
the reported sizes (for example the component-size table). Values are copied
as published, including entries that are internally inconsistent.
"""

SOCIAL = {
    "node_count": 657681,
    "edge_count": 1302764,
    "average_degree": 1.980,  # equals edges_per_node, M/N
    "average_node_degree": 3,  # no standard formula reproduces this
    "average_clustering": 0.0660255640547,
    "assortativity": -0.299485679564,
    "er_baseline_clustering": 0.000000633539157535,
}

# connected component sizes, largest first
SOCIAL_COMPONENT_SIZES = (657587, 68, 11, 7, 5, 3)

# reported as 0.0028 / "0.28%"; the sizes above give about 2.858e-4
SOCIAL_FAILURE_PROBABILITY_AS_PRINTED = 0.0028

INTERACTION = {
    "node_count": 107518,
    "edge_count": 165501,
    "average_degree": 1.980,  # repeated from the social table; 165501/107518 is about 1.539
    "average_node_degree": 3,
    "average_clustering": 0.0314201008965,
    "assortativity_in": 0.118850333779,
    "assortativity_out": -0.0292121272188,
    "er_baseline_clustering": 0.00000307811139486,
    "strong_component_count": 102963,
    "weak_component_count": 551004,  # exceeds node_count, so cannot be right
}

# (social id, social degree, interaction id, interaction indegree)
TOP_DEGREE_VS_INDEGREE = (
    ("329686", 2643, "12130", 67),
    ("209834", 2074, "2259", 58),
    ("65879", 1388, "7445", 53),
    ("2826", 1299, "15015", 52),
    ("25239", 1296, "1148", 51),
    ("15602", 1273, "11892", 48),
    ("1169", 1250, "680", 46),
    ("2441", 1207, "3502", 46),
    ("483496", 1200, "6583", 45),
    ("15910", 1157, "29083", 44),
)

# (social id, its indegree in the interaction graph or None,
#  interaction id, its degree in the social graph); row 6 reads 25602 here vs 15602 above
CROSS_LOOKUP = (
    ("329686", None, "12130", 116),
    ("209834", 1, "2259", 226),
    ("65879", 5, "7445", 98),
    ("2826", 18, "15015", 462),
    ("25239", 10, "1148", 98),
    ("25602", 29, "11892", 733),
    ("1169", 3, "680", 159),
    ("2441", 24, "3502", 164),
    ("483496", 2, "6583", 570),
    ("15910", 4, "29083", 101),
)

# pair_count -> (mean path length, failed chains); as printed, rounded lengths
MILGRAM_SOCIAL = {96: (5, 0), 24000: (5, 5), 657681: (5, 5)}
MILGRAM_INTERACTION_DIRECTED = {96: (8, 94), 24000: (9, 23562), 107518: (9, 105723)}
MILGRAM_INTERACTION_AS_UNDIRECTED = {96: (7, 9), 24000: (7, 2121), 107518: (7, 9505)}
