# Standard library
import math

# Denominator of the energy-to-ropelength bound L > (E / 4.57)^(3/4).
ROPELENGTH_DENOMINATOR = 4.57

# The same denominator in the limit of many crossings.
ROPELENGTH_DENOMINATOR_LARGE = 3.63

# Best established prefactor of the C^(3/4) ropelength lower bound.
ESTABLISHED_PREFACTOR = 1.10

# Minimum MD cross energy of two linked squares. Used as the per-linkage
# minimum for polygonal links even though two pentagons do slightly better.
MD_LINK_MIN = 85.5

# Minimum Möbius self energy of any closed curve (the round circle).
MOBIUS_SELF_MIN = 4.0

# Minimum MD self energy of any polygon (the square).
MD_SELF_MIN = 4.0

# Minimum Möbius cross energy of a Hopf-linked pair of curves.
MOBIUS_LINK_MIN = 4 * math.pi**2

# Möbius energy per crossing of a tambourine with many small circles.
TAMBOURINE_PER_CROSSING = 2 * math.pi**2 + 2
