"""
Klein group actions on curves.
"""

from audits.base import AuditCase
from audits.common import KLEIN, classes, group, table
from audits.registry import register
from characters import min_faithful_dim
from groups import genus_spectrum, min_orbit_length

SPECTRUM_BOUND = 45
REAL_BOUND = 15


@register
class CurvesGenusSpectrum(AuditCase):
    case_id = "curves.genus-spectrum"
    anchor = "Klein group, genera of curves"
    quote = "\\g(C)\\in\\{3,8,10,15,17,19,22,24,29,31,33,36,40,43,45\\}"
    expected = [3, 8, 10, 15, 17, 19, 22, 24, 29, 31, 33, 36, 40, 43, 45]

    def evaluate(self):
        return genus_spectrum(group(KLEIN), SPECTRUM_BOUND, classes=classes(KLEIN))


@register
class CurvesRealG10(AuditCase):
    case_id = "curves.real-g10"
    anchor = "Real curves with a Klein group action"
    quote = "so $D-K_C$ is special"
    expected = {
        "rr_shift": 3,
        "clifford_max_h0": 4,
        "max_target_dim": 3,
        "min_real_faithful_dim": 6,
        "min_orbit_g10": 24,
        "real_genera_below_15": [8],
    }

    def evaluate(self):
        g = 10
        orbit = self.computed("shortest orbit on a genus-10 curve", min_orbit_length(group(KLEIN), g, classes(KLEIN)))
        deg = orbit - (2 * g - 2)
        # h0(D - K) - h0(2K - D) = deg(D - K) - g + 1
        shift = g - 1 - deg
        clifford = deg // 2 + 1
        real_min = min_faithful_dim(table(KLEIN), "real")
        self.computed(f"a faithful real action on P^n needs n + 1 >= {real_min}", real_min)

        spectrum = genus_spectrum(group(KLEIN), REAL_BOUND - 1, classes=classes(KLEIN))
        real = []
        for genus in spectrum:
            if genus == 3:
                self.computed("genus 3: the canonical model lies in P^2", 3)
                continue
            if genus == g and clifford - 1 < real_min - 1:
                continue
            real.append(genus)
        return {
            "rr_shift": shift,
            "clifford_max_h0": clifford,
            "max_target_dim": clifford - 1,
            "min_real_faithful_dim": real_min,
            "min_orbit_g10": orbit,
            "real_genera_below_15": real,
        }
