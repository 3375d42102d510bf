"""Reference values generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit."""

BESSEL_K_IMAG = [  # (nu, x, K_{i nu}(x))
    (0, 1, 0.42102443824070833),
    (1, 1, 0.28942803702599213),
    (0.5, 0.1, 1.5736894873785721),
    (5, 2, -0.00034633788080657143),
    (3, 10, 1.1540111450067397e-5),
    (20, 10, -4.9508444413020093e-15),
    (2.5, 30, 1.9246410371498664e-14),
]

CONICAL_P = [  # (mu, nu, z, P^mu_{-1/2+i nu}(z))
    (0, 0, 1.5, 0.94500633092975805),
    (0, 1, 2, 0.55641354893507601),
    (0.5, 2, 1.2, 0.31380954782826673),
    (1, 0.5, 3, -0.28953447274122778),
    (-0.5, 3, 5, 0.067263052511179231),
    (1.5, 1, 1.05, -4.8340656904151042),
    (0, 8, 10, -0.036243104595172881),
    (0.25, 4, 2.5, 0.33779971471946585),
]

CONICAL_Q = [  # (mu, nu, z, Q^mu_{-1/2+i nu}(z))
    (0, 0, 1.5, complex(2.0189058199784232, 0.0)),
    (0, 1, 2, complex(-0.35818372213629646, -0.87075410739022894)),
    (0.5, 2, 1.2, complex(1.4577666841167028, 0.49293088504180879)),
    (1, 0.5, 3, complex(-0.59494822308942649, 0.41712059451632)),
    (-0.5, 3, 5, complex(-0.15640676578964323, 0.10565655581357258)),
    (1.5, 1, 1.05, complex(-0.14405417355648709, -7.5933326299892821)),
]

WHITTAKER_W = [  # (kappa, m, z, W_{kappa,m}(z))
    (0, 0.5, 2, 0.36787944117144232),
    (0.5, 0.25, 1, 0.63529612914865373),
    (-1, 0.5j, 3, 0.042572527724487095),
    (1.5, 1j, 0.7, -0.27265317025218093),
    (-0.25, 2j, 5, 0.02533348112016539),
    (2, 0.1, 10, 0.52466208438847136),
]

GAMMA = [  # (z, Gamma(z))
    ((0.5+3j), complex(0.021445670552430646, 0.0068653648372616779)),
    ((-2.5+0.1j), complex(-0.89650770119975878, -0.099318350500568559)),
    ((10+10j), complex(1423.8519417891831, -3496.0819733079446)),
    ((0.001+50j), complex(2.6407487385846118e-35, 8.238407351340658e-36)),
]

HEAT_KERNEL = [  # (rho, t, K_t(rho)) for d/dt = Laplacian on H^2, curvature -1
    (0.1, 0.1, 0.75014271365435373),
    (0.5, 0.5, 0.1168162239484122),
    (1, 1, 0.041491183957822218),
    (2, 0.5, 0.013668272010699109),
    (3, 2, 0.0038802213894533372),
    (0.0, 1.0, 0.057535755205721975),
]

GREENS = [  # (rho, E, G_E(rho))
    (0.5, 1, 0.1263350526671865),
    (1, 2, 0.030424182768945765),
    (2, 0.5, 0.017300005942126358),
]
