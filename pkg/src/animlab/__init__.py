"""animlab: a signal-processing toolkit for interruptible animations.

Animations are modeled as signal transformations: a target attribute is a
piecewise-constant step signal, and a smoother (simple easing segments,
Hermite splines, FIR convolution with an easing's derivative, or IIR
state-space systems) turns it into a displayed signal that stays smooth
in both position and velocity even under rapid retargeting.
"""

from .signal_core import Animator, SampledSignal, StepSignal, sample, step_from_events
from .easing import Easing, bspline, make_easing, one_pole_cascade, smoothstep, warp_easing
from .baseline import (
    SimpleAnimator,
    SplineAnimator,
    hermite,
    simple_animator,
    spline_animator,
    spline_limit_step_response,
)
from .fir import (
    FirCoefficients,
    FirDiscreteFilter,
    FirStepAnimator,
    convolve_oracle,
    fir_coeffs_from_easing,
    fir_response,
    fir_step_animator,
)
from .iir import (
    Biquad,
    BiquadCascade,
    IirAnimator,
    SpringParams,
    StateSpaceSystem,
    discretize,
    iir_animator,
    make_one_pole_system,
    make_spring_system,
    simulate,
    step_response,
)
from .graph import classify, gain, identity, impulse_response, map_block, parallel, series
from .arc import arc_length, elliptic_e, ellipse_point, make_arc_easing, sigma, sigma_inverse
from .apps import CharRecord, HistogramPipeline, PermutationScene, TextDocument, char_anim_tick
from .harness import Scenario, Trace, run_scenario

__version__ = "0.1.0"
