import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="binopy",
    version="0.1.0",
    author="binopy contributors",
    description="generalized Pascal triangles of binary words and their limit sets",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    extras_require={
        'test': ['pytest>=6.2', 'hypothesis>=6.0'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=setuptools.find_packages(
        include=['binopy', 'binopy.*'],
    ),
    entry_points={
        'console_scripts': ['binopy=binopy.cli:main'],
    },
    python_requires=">=3.8",
)
