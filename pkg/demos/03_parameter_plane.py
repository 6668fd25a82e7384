"""Parameter plane: region labels, then the fate of a lower critical value."""
import math

from tandyn import ClassifyConfig, GridSpec, ParamMode, render_parameter, write_ppm
from tandyn.analysis import Region
from tandyn.raster import FATE_PALETTE, REGION_PALETTE

spec = GridSpec(1.5j, 4 * math.pi, 4.0, 480, 160)

regions = render_parameter(spec, ParamMode.ANALYTIC)
write_ppm(regions, REGION_PALETTE, "param_regions.ppm")
for reg, n in regions.counts().items():
    print(f"{Region(reg).name:20s} {n}")

# Thin features (the wandering lines, the strip edges) are measure zero
# and rarely land on a pixel centre, so the critical-orbit picture is
# dominated by the lobe and the primary basin.
fates = render_parameter(spec, ParamMode.CRITICAL_ORBIT, ClassifyConfig(budget=300), workers=4)
write_ppm(fates, FATE_PALETTE, "param_critical.ppm")
print({f.name: c for f, c in fates.counts().items() if c})
