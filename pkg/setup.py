import setuptools

setuptools.setup(
    name='cambrian',
    version='1.0.0',
    description='cambrian - Cambrian semilattices of Coxeter groups, with exact arithmetic and EL-labelling checks',
    long_description="Python routines for sortable elements, Cambrian semilattices and the topology of their intervals.",
    long_description_content_type="text/markdown",
    license='MIT Licence',
    packages=['cambrian'],
    package_data={'cambrian': ['coxeter-A2.json', 'coxeter-A3.json', 'coxeter-A4.json',
                               'coxeter-B3.json', 'coxeter-H3.json', 'coxeter-A2-affine.json',
                               'coxeter-I2-infinity.json', ]},
    scripts=['scripts/cambrian.py'],
    python_requires='>=3.7',
    install_requires=['sympy', 'mpmath', 'networkx', 'graphviz'],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords='Coxeter groups Cambrian lattices sortable elements poset topology',
)
