#!/usr/bin/env python
# coding=utf-8

from setuptools import setup, find_packages

setup(
    name='hpfssm',
    version='0.1.0',
    description=(
        'Speed and separation monitoring with a haptic potential field: monitor, simulator and analysis tools'
    ),
    license='MIT License',
    packages=find_packages(exclude=['test', 'test.*', 'example', 'example.*']),
    platforms=["all"],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Operating System :: OS Independent',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering'
    ],
    python_requires='>=3.7',
    install_requires=[
        'numpy>=1.17',
        'matplotlib',
        'scipy',
    ],
    entry_points={
        'console_scripts': ['hpfssm=hpfssm.cli:main'],
    },
)
