'''
setup.py
'''


from setuptools import setup

setup(

    name='heawood-ude',

    version='1.0.0',
    description='The eleven unit distance embeddings of the Heawood graph',

    packages=['heawood_ude',
              'heawood_ude.kernels',
              'heawood_ude.exporters'],
    package_data={'heawood_ude': ['data/*.yaml']},

    zip_safe=False,
    python_requires='>=3.8',
    install_requires=[
        "mpmath",
        "numpy",
        "sympy",
        "svgwrite",
        "pyyaml"
    ],
    entry_points={
        'console_scripts': ['heawood-ude=heawood_ude.cli:main'],
    },
    license='LICENSE'
)
