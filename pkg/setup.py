from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="dual-complex-eigen",
    version="1.0.0",
    author="Dual Complex Eigen Contributors",
    description="Eigenvalues, Jordan forms and diagonalizability of dual complex matrices",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"dual_complex_eigen": ["fixtures/*.json"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21.0",
        "scipy>=1.7.0",
        "rich>=10.0.0",
    ],
    entry_points={
        "console_scripts": [
            "dual-complex-eigen=dual_complex_eigen.cli:main",
        ],
    },
)
