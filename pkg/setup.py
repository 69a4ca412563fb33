import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name='HoroCalc',
    version='0.1.0',
    description='Stringy E-functions and smoothness of horospherical varieties',
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        'License :: OSI Approved :: MIT License',
        "Operating System :: OS Independent",
        'Programming Language :: Python :: 3',
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=setuptools.find_packages(exclude=["tests", "examples*"]),
    python_requires='>=3.9',
    install_requires=[
        "numpy>=1.21.2",
        "sympy>=1.14",
        "pycddlib>=2.1,<3",
        "tqdm",
        "python-dotenv",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["horocalc=HoroCalc.cli:main"],
    },
)
